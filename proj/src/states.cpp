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

#include "rqc/error.hpp"
#include "rqc/states.hpp"

namespace rqc::states {

namespace {

void check_normalized(cx alpha, cx beta) {
  const double n = std::norm(alpha) + std::norm(beta);
  if (std::abs(n - 1.0) > kNormTolerance) {
    throw NormalizationError("input amplitudes are not normalized: |a|^2+|b|^2 = " +
                             std::to_string(n));
  }
}

}  // namespace

InputAmplitudes InputAmplitudes::real(double alpha, double beta) {
  check_normalized(cx{alpha, 0}, cx{beta, 0});
  return InputAmplitudes{cx{alpha, 0}, cx{beta, 0}, false};
}

InputAmplitudes InputAmplitudes::complex_amplitudes(cx alpha, cx beta) {
  check_normalized(alpha, beta);
  return InputAmplitudes{alpha, beta, true};
}

StateVector InputAmplitudes::chi(const QubitLabel& q) const {
  return StateVector(QubitRegister{q}, {alpha, beta});
}

StateVector InputAmplitudes::chi_orthogonal(const QubitLabel& q) const {
  return StateVector(QubitRegister{q}, {-std::conj(beta), std::conj(alpha)});
}

StateVector phi_basis(int b, const QubitRegister& reg) {
  if (b != 0 && b != 1) throw Error("phi_basis argument must be 0 or 1");
  if (reg.size() != 3) throw DimensionError("phi_basis needs a three-qubit register");
  const double w23 = std::sqrt(2.0 / 3.0);
  const double w16 = std::sqrt(1.0 / 6.0);
  std::vector<cx> amps(8, cx{0, 0});
  if (b == 0) {
    amps[0b000] = w23;
    amps[0b101] = w16;
    amps[0b110] = w16;
  } else {
    amps[0b111] = w23;
    amps[0b001] = w16;
    amps[0b010] = w16;
  }
  return StateVector(reg, std::move(amps));
}

StateVector telecloned_input(const InputAmplitudes& amps, const QubitRegister& reg) {
  check_normalized(amps.alpha, amps.beta);
  const StateVector p0 = phi_basis(0, reg);
  const StateVector p1 = phi_basis(1, reg);
  std::vector<cx> out(8);
  for (std::size_t i = 0; i < 8; ++i) {
    out[i] = amps.alpha * p0.amplitude(i) + amps.beta * p1.amplitude(i);
  }
  return StateVector(reg, std::move(out));
}

StateVector bell_state(Bell b, const QubitRegister& reg) {
  if (reg.size() != 2) throw DimensionError("bell_state needs a two-qubit register");
  const std::array<cx, 4> a = bell_amplitudes(b);
  return StateVector(reg, std::vector<cx>(a.begin(), a.end()));
}

DensityOperator smolin(const std::array<QubitLabel, 4>& labels) {
  const QubitRegister reg{labels[0], labels[1], labels[2], labels[3]};
  std::vector<cx> m(16 * 16, cx{0, 0});
  for (int i = 0; i < 4; ++i) {
    const std::array<cx, 4> b = bell_amplitudes(bell_from_index(i));
    const std::vector<cx> pair(b.begin(), b.end());
    const std::vector<cx> v = kernels::kron_vec(pair, pair);
    for (std::size_t r = 0; r < 16; ++r) {
      for (std::size_t c = 0; c < 16; ++c) {
        m[r * 16 + c] += 0.25 * v[r] * std::conj(v[c]);
      }
    }
  }
  return DensityOperator(reg, std::move(m));
}

StateVector distribution_resource(const QubitRegister& reg) {
  if (reg.size() != 4) throw DimensionError("distribution_resource needs four qubits");
  const QubitRegister tail{reg.label(1), reg.label(2), reg.label(3)};
  const StateVector p0 = phi_basis(0, tail);
  const StateVector p1 = phi_basis(1, tail);
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<cx> amps(16);
  for (std::size_t i = 0; i < 8; ++i) {
    amps[i] = s * p0.amplitude(i);
    amps[8 + i] = s * p1.amplitude(i);
  }
  return StateVector(reg, std::move(amps));
}

}  // namespace rqc::states
