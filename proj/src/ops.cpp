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

#include "rqc/eig.hpp"
#include "rqc/error.hpp"
#include "rqc/ops.hpp"

namespace rqc {

StateVector kron(const StateVector& a, const StateVector& b) {
  QubitRegister reg = a.reg().joined(b.reg());
  return StateVector::unchecked(std::move(reg), kernels::kron_vec(a.amplitudes(), b.amplitudes()));
}

DensityOperator kron(const DensityOperator& a, const DensityOperator& b) {
  QubitRegister reg = a.reg().joined(b.reg());
  return DensityOperator::unchecked(
      std::move(reg), kernels::kron_mat(a.matrix(), a.dim(), b.matrix(), b.dim()));
}

namespace {

std::vector<int> target_positions(const QubitRegister& reg, const Operator& g,
                                  const std::vector<QubitLabel>& targets) {
  if (static_cast<std::size_t>(g.qubits()) != targets.size()) {
    throw DimensionError("operator size does not match target count");
  }
  return reg.positions(targets);
}

}  // namespace

StateVector apply(const StateVector& s, const Operator& g,
                  const std::vector<QubitLabel>& targets) {
  const std::vector<int> pos = target_positions(s.reg(), g, targets);
  // The checked constructor re-validates the norm, which rejects
  // non-unitary gates on pure states.
  return StateVector(s.reg(), kernels::apply_vec(s.amplitudes(), s.qubits(), g.matrix(), pos));
}

DensityOperator apply(const DensityOperator& rho, const Operator& g,
                      const std::vector<QubitLabel>& targets) {
  const std::vector<int> pos = target_positions(rho.reg(), g, targets);
  return DensityOperator::unchecked(
      rho.reg(), kernels::apply_mat(rho.matrix(), rho.qubits(), g.matrix(), pos));
}

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<QubitLabel>& keep) {
  if (keep.empty()) throw LabelError("partial_trace requires a nonempty keep list");
  const std::vector<int> pos = rho.reg().positions(keep);
  return DensityOperator::unchecked(QubitRegister(keep),
                                    kernels::partial_trace(rho.matrix(), rho.qubits(), pos));
}

HermitianMatrix partial_transpose(const DensityOperator& rho,
                                  const std::vector<QubitLabel>& subset) {
  const std::vector<int> pos = rho.reg().positions(subset);
  return HermitianMatrix{rho.dim(),
                         kernels::partial_transpose(rho.matrix(), rho.qubits(), pos)};
}

double min_eigenvalue(const HermitianMatrix& m) {
  return min_hermitian_eigenvalue(m.data, m.dim);
}

double fidelity(const DensityOperator& rho, const StateVector& psi) {
  if (rho.reg() != psi.reg()) throw LabelError("register mismatch in fidelity");
  const std::size_t d = rho.dim();
  cx acc{0, 0};
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      acc += std::conj(psi.amplitude(r)) * rho.entry(r, c) * psi.amplitude(c);
    }
  }
  return acc.real();
}

double trace_distance(const DensityOperator& a, const DensityOperator& b) {
  if (a.dim() != b.dim()) throw DimensionError("dimension mismatch in trace_distance");
  const std::size_t d = a.dim();
  std::vector<cx> diff(d * d);
  for (std::size_t i = 0; i < d * d; ++i) diff[i] = a.matrix()[i] - b.matrix()[i];
  double acc = 0.0;
  for (double ev : hermitian_eigenvalues(diff, d)) acc += std::abs(ev);
  return 0.5 * acc;
}

DensityOperator promote(const StateVector& psi) {
  const std::size_t d = psi.dim();
  std::vector<cx> m(d * d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      m[r * d + c] = psi.amplitude(r) * std::conj(psi.amplitude(c));
    }
  }
  return DensityOperator::unchecked(psi.reg(), std::move(m));
}

}  // namespace rqc
