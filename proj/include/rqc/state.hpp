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
#include <vector>

#include "rqc/kernels.hpp"
#include "rqc/register.hpp"

namespace rqc {

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kPositivityTolerance = 1e-10;

// A k-qubit matrix (gates, projectors, Pauli corrections). Unitarity is not
// required here; callers that need it check is_unitary().
class Operator {
 public:
  Operator(int qubits, std::vector<cx> matrix);
  static Operator single_qubit(const std::array<cx, 4>& m);
  static Operator identity(int qubits);

  int qubits() const { return qubits_; }
  std::size_t dim() const { return std::size_t{1} << qubits_; }
  const std::vector<cx>& matrix() const { return matrix_; }
  cx entry(std::size_t r, std::size_t c) const { return matrix_[r * dim() + c]; }

  bool is_unitary(double tol = kNormTolerance) const;
  Operator dagger() const;

 private:
  int qubits_;
  std::vector<cx> matrix_;
};

// Pure state over a labeled register. Unit norm enforced at construction.
class StateVector {
 public:
  StateVector(QubitRegister reg, std::vector<cx> amplitudes);
  static StateVector basis(QubitRegister reg, std::size_t index);
  // Skips the norm check; for internal values that are normalized by
  // construction.
  static StateVector unchecked(QubitRegister reg, std::vector<cx> amplitudes);

  const QubitRegister& reg() const { return reg_; }
  const std::vector<cx>& amplitudes() const { return amps_; }
  int qubits() const { return reg_.size(); }
  std::size_t dim() const { return reg_.dim(); }
  cx amplitude(std::size_t i) const { return amps_[i]; }

  double norm() const;
  // <this|other>; registers must match exactly.
  cx inner(const StateVector& other) const;

 private:
  StateVector() = default;
  QubitRegister reg_;
  std::vector<cx> amps_;
};

// Mixed state over a labeled register, row-major dim x dim. Hermiticity and
// unit trace are enforced at construction; positivity is an eigensolve, so
// it is checked on demand via assert_positive().
class DensityOperator {
 public:
  DensityOperator(QubitRegister reg, std::vector<cx> matrix);
  static DensityOperator maximally_mixed(QubitRegister reg);
  static DensityOperator unchecked(QubitRegister reg, std::vector<cx> matrix);

  const QubitRegister& reg() const { return reg_; }
  const std::vector<cx>& matrix() const { return mat_; }
  int qubits() const { return reg_.size(); }
  std::size_t dim() const { return reg_.dim(); }
  cx entry(std::size_t r, std::size_t c) const { return mat_[r * dim() + c]; }

  double trace_real() const;
  // Throws NormalizationError if the minimum eigenvalue is below -tol.
  void assert_positive(double tol = kPositivityTolerance) const;

 private:
  DensityOperator() = default;
  QubitRegister reg_;
  std::vector<cx> mat_;
};

}  // namespace rqc
