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

// Reference kernels. Everything here favors the textbook formulation over
// speed: gates are embedded as full 2^n x 2^n operators and multiplied out,
// Bell collapse is projector sandwich + partial trace. Kept as the ground
// truth the omp kernels are tested against.

#include <cassert>

#include "rqc/kernels.hpp"

namespace rqc::kernels::serial {

using detail::complement_positions;
using detail::scatter_bits;

std::vector<cx> kron_vec(const std::vector<cx>& a, const std::vector<cx>& b) {
  std::vector<cx> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i * b.size() + j] = a[i] * b[j];
    }
  }
  return out;
}

std::vector<cx> kron_mat(const std::vector<cx>& a, std::size_t da, const std::vector<cx>& b,
                         std::size_t db) {
  const std::size_t dim = da * db;
  std::vector<cx> out(dim * dim);
  for (std::size_t ra = 0; ra < da; ++ra) {
    for (std::size_t ca = 0; ca < da; ++ca) {
      const cx va = a[ra * da + ca];
      for (std::size_t rb = 0; rb < db; ++rb) {
        for (std::size_t cb = 0; cb < db; ++cb) {
          out[(ra * db + rb) * dim + (ca * db + cb)] = va * b[rb * db + cb];
        }
      }
    }
  }
  return out;
}

std::vector<cx> embed(const std::vector<cx>& gate, const std::vector<int>& targets, int n) {
  const int k = static_cast<int>(targets.size());
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t gdim = std::size_t{1} << k;
  std::vector<cx> full(dim * dim, cx{0.0, 0.0});
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t gc = 0;
    for (int bi = 0; bi < k; ++bi) {
      gc = (gc << 1) | ((col >> (n - 1 - targets[bi])) & 1u);
    }
    for (std::size_t gr = 0; gr < gdim; ++gr) {
      const cx v = gate[gr * gdim + gc];
      if (v == cx{0.0, 0.0}) continue;
      std::size_t row = col;
      for (int bi = 0; bi < k; ++bi) {
        const int shift = n - 1 - targets[bi];
        row &= ~(std::size_t{1} << shift);
        row |= ((gr >> (k - 1 - bi)) & std::size_t{1}) << shift;
      }
      full[row * dim + col] += v;
    }
  }
  return full;
}

namespace {

std::vector<cx> matmul(const std::vector<cx>& a, const std::vector<cx>& b, std::size_t dim) {
  std::vector<cx> out(dim * dim, cx{0.0, 0.0});
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t k = 0; k < dim; ++k) {
      const cx v = a[r * dim + k];
      if (v == cx{0.0, 0.0}) continue;
      for (std::size_t c = 0; c < dim; ++c) {
        out[r * dim + c] += v * b[k * dim + c];
      }
    }
  }
  return out;
}

std::vector<cx> dagger(const std::vector<cx>& a, std::size_t dim) {
  std::vector<cx> out(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      out[r * dim + c] = std::conj(a[c * dim + r]);
    }
  }
  return out;
}

}  // namespace

std::vector<cx> apply_vec(const std::vector<cx>& amps, int n, const std::vector<cx>& g,
                          const std::vector<int>& targets) {
  const std::size_t dim = std::size_t{1} << n;
  const std::vector<cx> full = embed(g, targets, n);
  std::vector<cx> out(dim, cx{0.0, 0.0});
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      out[r] += full[r * dim + c] * amps[c];
    }
  }
  return out;
}

std::vector<cx> apply_mat(const std::vector<cx>& rho, int n, const std::vector<cx>& g,
                          const std::vector<int>& targets) {
  const std::size_t dim = std::size_t{1} << n;
  const std::vector<cx> full = embed(g, targets, n);
  return matmul(matmul(full, rho, dim), dagger(full, dim), dim);
}

std::vector<cx> partial_trace(const std::vector<cx>& rho, int n, const std::vector<int>& keep) {
  const std::size_t dim = std::size_t{1} << n;
  const std::vector<int> traced = complement_positions(keep, n);
  const int m = static_cast<int>(keep.size());
  const std::size_t kdim = std::size_t{1} << m;
  const std::size_t tdim = std::size_t{1} << traced.size();
  std::vector<cx> out(kdim * kdim, cx{0.0, 0.0});
  for (std::size_t r = 0; r < kdim; ++r) {
    for (std::size_t c = 0; c < kdim; ++c) {
      cx acc{0.0, 0.0};
      for (std::size_t t = 0; t < tdim; ++t) {
        const std::size_t tt = scatter_bits(t, traced, n);
        acc += rho[(scatter_bits(r, keep, n) | tt) * dim + (scatter_bits(c, keep, n) | tt)];
      }
      out[r * kdim + c] = acc;
    }
  }
  return out;
}

std::vector<cx> partial_transpose(const std::vector<cx>& rho, int n,
                                  const std::vector<int>& subset) {
  const std::size_t dim = std::size_t{1} << n;
  std::size_t mask = 0;
  for (int p : subset) mask |= std::size_t{1} << (n - 1 - p);
  std::vector<cx> out(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      const std::size_t rr = (r & ~mask) | (c & mask);
      const std::size_t cc = (c & ~mask) | (r & mask);
      out[rr * dim + cc] = rho[r * dim + c];
    }
  }
  return out;
}

std::vector<cx> bell_collapse_mat(const std::vector<cx>& rho, int n, int p0, int p1,
                                  const std::array<cx, 4>& bell, double& weight) {
  // Projector sandwich P rho P, then trace out the measured pair. After the
  // sandwich the pair factors out in the projected Bell state, so the
  // partial trace is exactly the pair-removed collapse.
  std::vector<cx> proj(16);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      proj[r * 4 + c] = bell[r] * std::conj(bell[c]);
    }
  }
  const std::vector<cx> sandwiched = apply_mat(rho, n, proj, {p0, p1});
  const std::vector<cx> out = partial_trace(sandwiched, n, complement_positions({p0, p1}, n));
  const std::size_t rdim = std::size_t{1} << (n - 2);
  double w = 0.0;
  for (std::size_t r = 0; r < rdim; ++r) w += out[r * rdim + r].real();
  weight = w;
  return out;
}

std::vector<cx> bell_collapse_vec(const std::vector<cx>& amps, int n, int p0, int p1,
                                  const std::array<cx, 4>& bell, double& weight) {
  // Partial inner product <bell|_{p0,p1} amps, written out directly.
  const std::vector<int> pair = {p0, p1};
  const std::vector<int> rest = complement_positions(pair, n);
  const std::size_t rdim = std::size_t{1} << (n - 2);
  std::vector<cx> out(rdim, cx{0.0, 0.0});
  for (std::size_t r = 0; r < rdim; ++r) {
    const std::size_t base = scatter_bits(r, rest, n);
    for (std::size_t x = 0; x < 4; ++x) {
      out[r] += std::conj(bell[x]) * amps[base | scatter_bits(x, pair, n)];
    }
  }
  double w = 0.0;
  for (const cx& v : out) w += std::norm(v);
  weight = w;
  return out;
}

}  // namespace rqc::kernels::serial
