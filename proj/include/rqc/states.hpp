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

#include <array>

#include "rqc/ops.hpp"
#include "rqc/pauli.hpp"

namespace rqc::states {

// Amplitudes of the input qubit |chi> = alpha|0> + beta|1>. The protocol
// contract is real amplitudes; complex_mode exists for exploration (the
// pipeline stays exact for complex inputs too, see tests) and is excluded
// from the acceptance checks.
struct InputAmplitudes {
  cx alpha{1.0, 0.0};
  cx beta{0.0, 0.0};
  bool complex_mode = false;

  // Throws NormalizationError unless alpha^2 + beta^2 = 1 within 1e-12.
  static InputAmplitudes real(double alpha, double beta);
  static InputAmplitudes complex_amplitudes(cx alpha, cx beta);

  StateVector chi(const QubitLabel& q) const;
  // A state orthogonal to chi: -conj(beta)|0> + conj(alpha)|1>.
  StateVector chi_orthogonal(const QubitLabel& q) const;
};

// The two orthonormal three-qubit basis states of the one-to-two cloning
// expansion, on (ancilla, receiver, receiver):
//   b=0: sqrt(2/3)|000> + sqrt(1/6)(|101> + |110>)
//   b=1: sqrt(2/3)|111> + sqrt(1/6)(|001> + |010>)
StateVector phi_basis(int b, const QubitRegister& reg = {"A", "B", "C"});

// alpha * phi_basis(0) + beta * phi_basis(1); the post-telecloning state
// whose single-receiver marginals are (5/6)|chi><chi| + (1/6)|chi_perp><chi_perp|.
StateVector telecloned_input(const InputAmplitudes& amps,
                             const QubitRegister& reg = {"A", "B", "C"});

StateVector bell_state(Bell b, const QubitRegister& reg);

// The four-qubit unlockable bound entangled resource
// (1/4) sum_i |Phi^i><Phi^i| (x) |Phi^i><Phi^i|.
DensityOperator smolin(const std::array<QubitLabel, 4>& labels = {"D", "E", "F", "G"});

// (1/sqrt2)(|0>_P phi_basis(0) + |1>_P phi_basis(1)) on (P, A', B', C'):
// the free entangled resource for the redistribution stage.
StateVector distribution_resource(
    const QubitRegister& reg = {"P", "A'", "B'", "C'"});

}  // namespace rqc::states
