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
#include <complex>
#include <cstddef>
#include <vector>

namespace rqc {

using cx = std::complex<double>;

namespace kernels {

// Dense kernels over raw amplitude arrays.
//
// Registers are bit-indexed with position 0 as the MOST significant bit:
// for an n-qubit basis index b, the bit of position p is (b >> (n-1-p)) & 1.
// Density matrices are row-major dim x dim with dim = 2^n, and can be viewed
// as 2n-qubit amplitude vectors (row bits above column bits).
//
// Two implementations are built:
//   kernels::omp     production loops, bit-indexed, no operator
//                    materialization, OpenMP-parallel above a work threshold;
//   kernels::serial  plain reference: gate application embeds the full
//                    2^n x 2^n operator and multiplies it out, Bell collapse
//                    goes through an explicit projector sandwich.
// The unqualified functions below dispatch on the active backend. The two
// backends are cross-checked in tests/test_kernels.cpp and timed against
// each other by rqc_bench.

enum class Backend { serial, openmp };

// Default is openmp; the RQC_BACKEND environment variable ("serial" or
// "openmp") overrides it at startup.
Backend active_backend();
void set_backend(Backend b);

// Loops shorter than this much total work stay serial even on the omp path.
inline constexpr std::size_t kParallelThreshold = 4096;

namespace detail {

// Spread the m low bits of x (most significant first) over the register
// positions listed in `positions`.
inline std::size_t scatter_bits(std::size_t x, const std::vector<int>& positions, int n) {
  std::size_t out = 0;
  const int m = static_cast<int>(positions.size());
  for (int bi = 0; bi < m; ++bi) {
    out |= ((x >> (m - 1 - bi)) & std::size_t{1}) << (n - 1 - positions[bi]);
  }
  return out;
}

std::vector<int> complement_positions(const std::vector<int>& taken, int n);

}  // namespace detail

#define RQC_KERNEL_DECLS                                                                   \
  std::vector<cx> kron_vec(const std::vector<cx>& a, const std::vector<cx>& b);            \
  std::vector<cx> kron_mat(const std::vector<cx>& a, std::size_t da,                       \
                           const std::vector<cx>& b, std::size_t db);                      \
  std::vector<cx> apply_vec(const std::vector<cx>& amps, int n, const std::vector<cx>& g,  \
                            const std::vector<int>& targets);                              \
  std::vector<cx> apply_mat(const std::vector<cx>& rho, int n, const std::vector<cx>& g,   \
                            const std::vector<int>& targets);                              \
  std::vector<cx> partial_trace(const std::vector<cx>& rho, int n,                         \
                                const std::vector<int>& keep);                             \
  std::vector<cx> partial_transpose(const std::vector<cx>& rho, int n,                     \
                                    const std::vector<int>& subset);                       \
  std::vector<cx> bell_collapse_mat(const std::vector<cx>& rho, int n, int p0, int p1,     \
                                    const std::array<cx, 4>& bell, double& weight);        \
  std::vector<cx> bell_collapse_vec(const std::vector<cx>& amps, int n, int p0, int p1,    \
                                    const std::array<cx, 4>& bell, double& weight);

namespace serial {
RQC_KERNEL_DECLS
// Full 2^n x 2^n embedding of a 2^k x 2^k gate; reference-path helper,
// also used on its own by tests.
std::vector<cx> embed(const std::vector<cx>& gate, const std::vector<int>& targets, int n);
}  // namespace serial

namespace omp {
RQC_KERNEL_DECLS
}  // namespace omp

// Backend-dispatched entry points.
RQC_KERNEL_DECLS

#undef RQC_KERNEL_DECLS

}  // namespace kernels
}  // namespace rqc
