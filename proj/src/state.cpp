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
#include "rqc/state.hpp"

namespace rqc {

Operator::Operator(int qubits, std::vector<cx> matrix) : qubits_(qubits), matrix_(std::move(matrix)) {
  if (qubits_ < 0 || qubits_ > kMaxQubits) throw DimensionError("operator qubit count out of range");
  const std::size_t d = dim();
  if (matrix_.size() != d * d) throw DimensionError("operator matrix size is not 4^k");
}

Operator Operator::single_qubit(const std::array<cx, 4>& m) {
  return Operator(1, std::vector<cx>(m.begin(), m.end()));
}

Operator Operator::identity(int qubits) {
  const std::size_t d = std::size_t{1} << qubits;
  std::vector<cx> m(d * d, cx{0, 0});
  for (std::size_t i = 0; i < d; ++i) m[i * d + i] = cx{1, 0};
  return Operator(qubits, std::move(m));
}

bool Operator::is_unitary(double tol) const {
  const std::size_t d = dim();
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      cx acc{0, 0};
      for (std::size_t k = 0; k < d; ++k) acc += std::conj(matrix_[k * d + r]) * matrix_[k * d + c];
      const cx expect = (r == c) ? cx{1, 0} : cx{0, 0};
      if (std::abs(acc - expect) > tol) return false;
    }
  }
  return true;
}

Operator Operator::dagger() const {
  const std::size_t d = dim();
  std::vector<cx> m(d * d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) m[r * d + c] = std::conj(matrix_[c * d + r]);
  }
  return Operator(qubits_, std::move(m));
}

StateVector::StateVector(QubitRegister reg, std::vector<cx> amplitudes)
    : reg_(std::move(reg)), amps_(std::move(amplitudes)) {
  if (amps_.size() != reg_.dim()) throw DimensionError("amplitude vector length is not 2^n");
  const double n = norm();
  if (std::abs(n - 1.0) > kNormTolerance) {
    throw NormalizationError("state vector norm " + std::to_string(n) + " is not 1");
  }
}

StateVector StateVector::basis(QubitRegister reg, std::size_t index) {
  std::vector<cx> amps(reg.dim(), cx{0, 0});
  amps.at(index) = cx{1, 0};
  return unchecked(std::move(reg), std::move(amps));
}

StateVector StateVector::unchecked(QubitRegister reg, std::vector<cx> amplitudes) {
  StateVector s;
  s.reg_ = std::move(reg);
  s.amps_ = std::move(amplitudes);
  return s;
}

double StateVector::norm() const {
  double acc = 0.0;
  for (const cx& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

cx StateVector::inner(const StateVector& other) const {
  if (reg_ != other.reg_) throw LabelError("register mismatch in inner product");
  cx acc{0, 0};
  for (std::size_t i = 0; i < amps_.size(); ++i) acc += std::conj(amps_[i]) * other.amps_[i];
  return acc;
}

DensityOperator::DensityOperator(QubitRegister reg, std::vector<cx> matrix)
    : reg_(std::move(reg)), mat_(std::move(matrix)) {
  const std::size_t d = reg_.dim();
  if (mat_.size() != d * d) throw DimensionError("density matrix size is not 4^n");
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = r; c < d; ++c) {
      if (std::abs(mat_[r * d + c] - std::conj(mat_[c * d + r])) > kNormTolerance) {
        throw NormalizationError("density matrix is not Hermitian");
      }
    }
  }
  if (std::abs(trace_real() - 1.0) > kNormTolerance) {
    throw NormalizationError("density matrix trace is not 1");
  }
}

DensityOperator DensityOperator::maximally_mixed(QubitRegister reg) {
  const std::size_t d = reg.dim();
  std::vector<cx> m(d * d, cx{0, 0});
  for (std::size_t i = 0; i < d; ++i) m[i * d + i] = cx{1.0 / static_cast<double>(d), 0};
  return unchecked(std::move(reg), std::move(m));
}

DensityOperator DensityOperator::unchecked(QubitRegister reg, std::vector<cx> matrix) {
  DensityOperator rho;
  rho.reg_ = std::move(reg);
  rho.mat_ = std::move(matrix);
  return rho;
}

double DensityOperator::trace_real() const {
  const std::size_t d = dim();
  double acc = 0.0;
  for (std::size_t i = 0; i < d; ++i) acc += mat_[i * d + i].real();
  return acc;
}

void DensityOperator::assert_positive(double tol) const {
  const double lo = min_hermitian_eigenvalue(mat_, dim());
  if (lo < -tol) {
    throw NormalizationError("density matrix has negative eigenvalue " + std::to_string(lo));
  }
}

}  // namespace rqc
