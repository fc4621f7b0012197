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

// Production kernels: bit-indexed loops that never materialize embedded
// operators. Output entries are independent, so every kernel parallelizes
// over them; the `if` clauses keep tiny protocol-sized inputs serial where
// fork/join overhead would dominate.

#include <cstdint>

#include "rqc/kernels.hpp"

namespace rqc::kernels::omp {

using detail::complement_positions;
using detail::scatter_bits;

namespace {

using ssize = std::ptrdiff_t;

// Gate index <-> register index scatter tables for a target list.
std::vector<std::size_t> scatter_table(std::size_t count, const std::vector<int>& positions,
                                       int n) {
  std::vector<std::size_t> table(count);
  for (std::size_t x = 0; x < count; ++x) table[x] = scatter_bits(x, positions, n);
  return table;
}

}  // namespace

std::vector<cx> kron_vec(const std::vector<cx>& a, const std::vector<cx>& b) {
  const std::size_t db = b.size();
  std::vector<cx> out(a.size() * db);
#pragma omp parallel for schedule(static) if (out.size() >= kParallelThreshold)
  for (ssize i = 0; i < static_cast<ssize>(a.size()); ++i) {
    const cx va = a[i];
    for (std::size_t j = 0; j < db; ++j) out[i * db + j] = va * b[j];
  }
  return out;
}

std::vector<cx> kron_mat(const std::vector<cx>& a, std::size_t da, const std::vector<cx>& b,
                         std::size_t db) {
  const std::size_t dim = da * db;
  std::vector<cx> out(dim * dim);
#pragma omp parallel for schedule(static) if (dim* dim >= kParallelThreshold)
  for (ssize row = 0; row < static_cast<ssize>(dim); ++row) {
    const std::size_t ra = row / db, rb = row % db;
    for (std::size_t ca = 0; ca < da; ++ca) {
      const cx va = a[ra * da + ca];
      for (std::size_t cb = 0; cb < db; ++cb) {
        out[row * dim + ca * db + cb] = va * b[rb * db + cb];
      }
    }
  }
  return out;
}

std::vector<cx> apply_vec(const std::vector<cx>& amps, int n, const std::vector<cx>& g,
                          const std::vector<int>& targets) {
  const int k = static_cast<int>(targets.size());
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t gdim = std::size_t{1} << k;
  const std::vector<int> rest = complement_positions(targets, n);
  const std::vector<std::size_t> tscat = scatter_table(gdim, targets, n);
  std::vector<cx> out(dim);
  const ssize groups = static_cast<ssize>(dim >> k);
#pragma omp parallel if (dim >= kParallelThreshold)
  {
    std::vector<cx> in(gdim);
#pragma omp for schedule(static)
    for (ssize o = 0; o < groups; ++o) {
      const std::size_t base = scatter_bits(static_cast<std::size_t>(o), rest, n);
      for (std::size_t c = 0; c < gdim; ++c) in[c] = amps[base | tscat[c]];
      for (std::size_t r = 0; r < gdim; ++r) {
        cx acc{0.0, 0.0};
        const cx* grow = g.data() + r * gdim;
        for (std::size_t c = 0; c < gdim; ++c) acc += grow[c] * in[c];
        out[base | tscat[r]] = acc;
      }
    }
  }
  return out;
}

std::vector<cx> apply_mat(const std::vector<cx>& rho, int n, const std::vector<cx>& g,
                          const std::vector<int>& targets) {
  // View rho as a 2n-qubit vector (row bits above column bits):
  // G rho G^dag = apply G on the row positions, then conj(G) on the columns.
  const int k = static_cast<int>(targets.size());
  std::vector<cx> gconj(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) gconj[i] = std::conj(g[i]);
  std::vector<int> cols(targets);
  for (int i = 0; i < k; ++i) cols[i] += n;
  return apply_vec(apply_vec(rho, 2 * n, g, targets), 2 * n, gconj, cols);
}

std::vector<cx> partial_trace(const std::vector<cx>& rho, int n, const std::vector<int>& keep) {
  const std::size_t dim = std::size_t{1} << n;
  const std::vector<int> traced = complement_positions(keep, n);
  const std::size_t kdim = std::size_t{1} << keep.size();
  const std::size_t tdim = std::size_t{1} << traced.size();
  const std::vector<std::size_t> kscat = scatter_table(kdim, keep, n);
  const std::vector<std::size_t> tscat = scatter_table(tdim, traced, n);
  std::vector<cx> out(kdim * kdim);
#pragma omp parallel for schedule(static) if (kdim* kdim* tdim >= kParallelThreshold)
  for (ssize e = 0; e < static_cast<ssize>(kdim * kdim); ++e) {
    const std::size_t rbase = kscat[e / kdim] * dim;
    const std::size_t cbase = kscat[e % kdim];
    cx acc{0.0, 0.0};
    for (std::size_t t = 0; t < tdim; ++t) {
      acc += rho[rbase + tscat[t] * dim + cbase + tscat[t]];
    }
    out[e] = acc;
  }
  return out;
}

std::vector<cx> partial_transpose(const std::vector<cx>& rho, int n,
                                  const std::vector<int>& subset) {
  const std::size_t dim = std::size_t{1} << n;
  std::size_t mask = 0;
  for (int p : subset) mask |= std::size_t{1} << (n - 1 - p);
  std::vector<cx> out(dim * dim);
#pragma omp parallel for schedule(static) if (dim* dim >= kParallelThreshold)
  for (ssize r = 0; r < static_cast<ssize>(dim); ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      const std::size_t rr = (static_cast<std::size_t>(r) & ~mask) | (c & mask);
      const std::size_t cc = (c & ~mask) | (static_cast<std::size_t>(r) & mask);
      out[rr * dim + cc] = rho[r * dim + c];
    }
  }
  return out;
}

std::vector<cx> bell_collapse_mat(const std::vector<cx>& rho, int n, int p0, int p1,
                                  const std::array<cx, 4>& bell, double& weight) {
  // out[r,c] = sum_{x,y} conj(bell[x]) bell[y] rho[r|x, c|y], pair removed.
  const std::size_t dim = std::size_t{1} << n;
  const std::vector<int> pair = {p0, p1};
  const std::vector<int> rest = complement_positions(pair, n);
  const std::size_t rdim = std::size_t{1} << (n - 2);
  const std::vector<std::size_t> rscat = scatter_table(rdim, rest, n);
  const std::vector<std::size_t> pscat = scatter_table(4, pair, n);
  std::vector<cx> out(rdim * rdim);
  double w = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : w) \
    if (rdim * rdim * 16 >= kParallelThreshold)
  for (ssize r = 0; r < static_cast<ssize>(rdim); ++r) {
    const std::size_t rowbase = rscat[r];
    for (std::size_t c = 0; c < rdim; ++c) {
      const std::size_t colbase = rscat[c];
      cx acc{0.0, 0.0};
      for (int x = 0; x < 4; ++x) {
        if (bell[x] == cx{0.0, 0.0}) continue;
        const std::size_t rowi = (rowbase | pscat[x]) * dim;
        for (int y = 0; y < 4; ++y) {
          if (bell[y] == cx{0.0, 0.0}) continue;
          acc += std::conj(bell[x]) * bell[y] * rho[rowi + (colbase | pscat[y])];
        }
      }
      out[r * rdim + c] = acc;
      if (static_cast<std::size_t>(r) == c) w += acc.real();
    }
  }
  weight = w;
  return out;
}

std::vector<cx> bell_collapse_vec(const std::vector<cx>& amps, int n, int p0, int p1,
                                  const std::array<cx, 4>& bell, double& weight) {
  const std::vector<int> pair = {p0, p1};
  const std::vector<int> rest = complement_positions(pair, n);
  const std::size_t rdim = std::size_t{1} << (n - 2);
  const std::vector<std::size_t> rscat = scatter_table(rdim, rest, n);
  const std::vector<std::size_t> pscat = scatter_table(4, pair, n);
  std::vector<cx> out(rdim);
  double w = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : w) if (rdim >= kParallelThreshold)
  for (ssize r = 0; r < static_cast<ssize>(rdim); ++r) {
    cx acc{0.0, 0.0};
    for (int x = 0; x < 4; ++x) {
      if (bell[x] == cx{0.0, 0.0}) continue;
      acc += std::conj(bell[x]) * amps[rscat[r] | pscat[x]];
    }
    out[r] = acc;
    w += std::norm(acc);
  }
  weight = w;
  return out;
}

}  // namespace rqc::kernels::omp
