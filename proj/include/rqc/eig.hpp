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

#include <vector>

#include "rqc/kernels.hpp"

namespace rqc {

// Eigenvalues of a Hermitian matrix (row-major dim x dim), ascending.
// Backed by Eigen's self-adjoint solver.
std::vector<double> hermitian_eigenvalues(const std::vector<cx>& mat, std::size_t dim);

double min_hermitian_eigenvalue(const std::vector<cx>& mat, std::size_t dim);

}  // namespace rqc
