// Copyright 2026 The rqc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>

#include "rqc/measure.hpp"
#include "rqc/states.hpp"
#include "rqc/transcript.hpp"

namespace rqc::redistribute {

// Second protocol stage: the controller transforms qubit D, Bell-measures
// (D, P) against the distribution resource, broadcasts the outcome, and each
// receiver applies the matching Pauli to its primed qubit. The resulting
// three-qubit state is the telecloning expansion of U|chi> for every outcome.

// A single-qubit control unitary; construction rejects non-unitary matrices.
class ControlUnitary {
 public:
  explicit ControlUnitary(const std::array<cx, 4>& matrix);

  static ControlUnitary identity();
  static ControlUnitary pauli_x();
  static ControlUnitary pauli_z();
  static ControlUnitary hadamard();
  static ControlUnitary phase(double theta);  // diag(1, e^{i theta})

  const std::array<cx, 4>& matrix() const { return m_; }
  Operator op() const { return Operator::single_qubit(m_); }

 private:
  std::array<cx, 4> m_;
};

// U|chi> presented with the global phase fixed: alpha', beta' real >= 0,
// theta in (0, 2pi], so U|chi> = alpha'|0> + beta' e^{i theta}|1>. When
// beta' = 0 theta is set to 2pi by convention (it is unobservable).
struct ChiPrime {
  double alpha_prime = 1.0;
  double beta_prime = 0.0;
  double theta = 0.0;
};

ChiPrime chi_prime_presentation(const ControlUnitary& u, const states::InputAmplitudes& amps);

// alpha'|0> + beta' e^{i theta}|1> on the given qubit.
StateVector chi_prime_state(const ChiPrime& cp, const QubitLabel& q);

// U d U^dag on a single-qubit state.
DensityOperator apply_control(const DensityOperator& d_state, const ControlUnitary& u);

// Pauli each receiver applies for broadcast outcome i. Derived from the
// four branches of the (D,P) Bell expansion: the mapping is the identity
// on indices (Phi^i -> sigma^i on each of A', B', C').
Pauli distribution_correction(Bell outcome);

struct TelecloneResult {
  Bell outcome = Bell::Phi0;
  double probability = 0.0;
  DensityOperator psi_prime;  // corrected state on (A', B', C')
  std::vector<locc::Event> events;
};

// Runs the redistribution given the controller's qubit (register {D}) and
// the resource on (P, A', B', C') or equivalent labels. Outcome forced or
// sampled.
TelecloneResult teleclone_out(const DensityOperator& chi_prime_d, const StateVector& resource,
                              std::optional<Bell> forced = std::nullopt,
                              OutcomeRng* rng = nullptr);

// Reduced states of the two receiver qubits (positions 1 and 2 of psi_prime).
std::pair<DensityOperator, DensityOperator> receiver_marginals(const DensityOperator& psi_prime);

}  // namespace rqc::redistribute
