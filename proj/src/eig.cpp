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

#include <Eigen/Dense>

#include "rqc/eig.hpp"
#include "rqc/error.hpp"

namespace rqc {

std::vector<double> hermitian_eigenvalues(const std::vector<cx>& mat, std::size_t dim) {
  if (mat.size() != dim * dim) throw DimensionError("eigenvalue input is not dim x dim");
  // Mapping row-major data as column-major yields the conjugate of a
  // Hermitian matrix, which has the same (real) spectrum.
  Eigen::Map<const Eigen::MatrixXcd> m(mat.data(), static_cast<Eigen::Index>(dim),
                                       static_cast<Eigen::Index>(dim));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

double min_hermitian_eigenvalue(const std::vector<cx>& mat, std::size_t dim) {
  return hermitian_eigenvalues(mat, dim).front();
}

}  // namespace rqc
