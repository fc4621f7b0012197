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

#include "rqc/state.hpp"

namespace rqc {

// Label-aware operations over states; all dispatch into rqc::kernels.

// Tensor product; registers must be disjoint, result order is a then b.
StateVector kron(const StateVector& a, const StateVector& b);
DensityOperator kron(const DensityOperator& a, const DensityOperator& b);

// Apply g to the target subsystem (U psi, or U rho U^dag). Targets may be in
// any order; the first target matches g's most significant bit. Applying a
// non-unitary g to a StateVector throws, since the result is unnormalized.
StateVector apply(const StateVector& s, const Operator& g, const std::vector<QubitLabel>& targets);
DensityOperator apply(const DensityOperator& rho, const Operator& g,
                      const std::vector<QubitLabel>& targets);

// Reduced state over `keep`, in the given order (which may permute qubits).
DensityOperator partial_trace(const DensityOperator& rho, const std::vector<QubitLabel>& keep);

// Transpose of the subset's indices. The result is Hermitian but in general
// not positive, so it is returned as a raw matrix.
struct HermitianMatrix {
  std::size_t dim = 0;
  std::vector<cx> data;
};
HermitianMatrix partial_transpose(const DensityOperator& rho,
                                  const std::vector<QubitLabel>& subset);

double min_eigenvalue(const HermitianMatrix& m);

// <psi| rho |psi>; registers must match exactly.
double fidelity(const DensityOperator& rho, const StateVector& psi);

// (1/2) sum |eigenvalues(a - b)|; requires equal dimension only.
double trace_distance(const DensityOperator& a, const DensityOperator& b);

// |psi><psi|
DensityOperator promote(const StateVector& psi);

}  // namespace rqc
