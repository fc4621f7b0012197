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

#include <cmath>
#include <numbers>

#include "rqc/error.hpp"
#include "rqc/redistribute.hpp"

namespace rqc::redistribute {

using locc::Event;
using locc::LocalOp;
using locc::Measurement;
using locc::Message;
using locc::PartyId;

ControlUnitary::ControlUnitary(const std::array<cx, 4>& matrix) : m_(matrix) {
  if (!Operator::single_qubit(m_).is_unitary()) {
    throw NormalizationError("control matrix is not unitary");
  }
}

ControlUnitary ControlUnitary::identity() {
  return ControlUnitary({cx{1, 0}, cx{0, 0}, cx{0, 0}, cx{1, 0}});
}

ControlUnitary ControlUnitary::pauli_x() {
  return ControlUnitary({cx{0, 0}, cx{1, 0}, cx{1, 0}, cx{0, 0}});
}

ControlUnitary ControlUnitary::pauli_z() {
  return ControlUnitary({cx{1, 0}, cx{0, 0}, cx{0, 0}, cx{-1, 0}});
}

ControlUnitary ControlUnitary::hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return ControlUnitary({cx{s, 0}, cx{s, 0}, cx{s, 0}, cx{-s, 0}});
}

ControlUnitary ControlUnitary::phase(double theta) {
  return ControlUnitary({cx{1, 0}, cx{0, 0}, cx{0, 0}, std::polar(1.0, theta)});
}

ChiPrime chi_prime_presentation(const ControlUnitary& u, const states::InputAmplitudes& amps) {
  cx v0 = u.matrix()[0] * amps.alpha + u.matrix()[1] * amps.beta;
  cx v1 = u.matrix()[2] * amps.alpha + u.matrix()[3] * amps.beta;

  // Fix the global phase so the |0> amplitude is real nonnegative (or the
  // |1> amplitude, when the |0> amplitude vanishes).
  const double a0 = std::abs(v0);
  if (a0 > kNormTolerance) {
    const cx phase = v0 / a0;
    v0 /= phase;
    v1 /= phase;
  } else if (std::abs(v1) > 0.0) {
    v1 = std::abs(v1);
    v0 = cx{0, 0};
  }

  ChiPrime out;
  out.alpha_prime = v0.real();
  out.beta_prime = std::abs(v1);
  if (out.beta_prime <= kNormTolerance) {
    out.theta = 2.0 * std::numbers::pi;  // unobservable; pinned by convention
  } else {
    double theta = std::arg(v1);
    if (theta <= 0.0) theta += 2.0 * std::numbers::pi;
    out.theta = theta;
  }
  return out;
}

StateVector chi_prime_state(const ChiPrime& cp, const QubitLabel& q) {
  return StateVector(QubitRegister{q},
                     {cx{cp.alpha_prime, 0}, std::polar(cp.beta_prime, cp.theta)});
}

DensityOperator apply_control(const DensityOperator& d_state, const ControlUnitary& u) {
  if (d_state.qubits() != 1) throw DimensionError("control acts on a single qubit");
  return apply(d_state, u.op(), {d_state.reg().label(0)});
}

Pauli distribution_correction(Bell outcome) { return pauli_from_index(index_of(outcome)); }

TelecloneResult teleclone_out(const DensityOperator& chi_prime_d, const StateVector& resource,
                              std::optional<Bell> forced, OutcomeRng* rng) {
  if (chi_prime_d.qubits() != 1) throw DimensionError("controller state must be one qubit");
  if (resource.qubits() != 4) throw DimensionError("distribution resource must be four qubits");
  if (!chi_prime_d.reg().disjoint_from(resource.reg())) {
    throw LabelError("controller and resource registers collide");
  }

  const QubitLabel d = chi_prime_d.reg().label(0);
  const QubitLabel p = resource.reg().label(0);
  const std::array<QubitLabel, 3> receivers = {resource.reg().label(1), resource.reg().label(2),
                                               resource.reg().label(3)};

  const DensityOperator joint = kron(chi_prime_d, promote(resource));
  BellMeasurement m = bell_measure(joint, {d, p}, forced, rng);

  TelecloneResult out{m.outcome, m.probability, std::move(m.post), {}};
  out.events.push_back(
      Event{0, Measurement{PartyId::controller, d, p, index_of(m.outcome), m.probability}});
  out.events.push_back(
      Event{1, Message{PartyId::controller, std::nullopt, index_of(m.outcome)}});

  const Pauli corr = distribution_correction(out.outcome);
  const Operator gate = Operator::single_qubit(pauli_matrix2(corr));
  constexpr std::array<PartyId, 3> parties = {PartyId::alice, PartyId::bob, PartyId::charlie};
  for (int i = 0; i < 3; ++i) {
    out.psi_prime = apply(out.psi_prime, gate, {receivers[i]});
    LocalOp op;
    op.party = parties[i];
    op.op = "correct:" + std::to_string(index_of(corr));
    op.targets = {receivers[i]};
    op.uses = {1};  // the broadcast within this fragment
    out.events.push_back(Event{2 + i, std::move(op)});
  }
  return out;
}

std::pair<DensityOperator, DensityOperator> receiver_marginals(const DensityOperator& psi_prime) {
  if (psi_prime.qubits() != 3) throw DimensionError("receiver_marginals needs three qubits");
  return {partial_trace(psi_prime, {psi_prime.reg().label(1)}),
          partial_trace(psi_prime, {psi_prime.reg().label(2)})};
}

}  // namespace rqc::redistribute
