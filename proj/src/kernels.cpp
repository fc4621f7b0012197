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

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstring>

#include "rqc/kernels.hpp"

namespace rqc::kernels {

namespace detail {

std::vector<int> complement_positions(const std::vector<int>& taken, int n) {
  std::vector<int> rest;
  rest.reserve(n - taken.size());
  for (int p = 0; p < n; ++p) {
    if (std::find(taken.begin(), taken.end(), p) == taken.end()) rest.push_back(p);
  }
  return rest;
}

}  // namespace detail

namespace {

Backend backend_from_env() {
  const char* env = std::getenv("RQC_BACKEND");
  if (env != nullptr && (std::strcmp(env, "serial") == 0)) return Backend::serial;
  return Backend::openmp;
}

std::atomic<Backend>& backend_state() {
  static std::atomic<Backend> state{backend_from_env()};
  return state;
}

}  // namespace

Backend active_backend() { return backend_state().load(std::memory_order_relaxed); }

void set_backend(Backend b) { backend_state().store(b, std::memory_order_relaxed); }

#define RQC_DISPATCH(call) \
  return active_backend() == Backend::serial ? serial::call : omp::call

std::vector<cx> kron_vec(const std::vector<cx>& a, const std::vector<cx>& b) {
  RQC_DISPATCH(kron_vec(a, b));
}

std::vector<cx> kron_mat(const std::vector<cx>& a, std::size_t da, const std::vector<cx>& b,
                         std::size_t db) {
  RQC_DISPATCH(kron_mat(a, da, b, db));
}

std::vector<cx> apply_vec(const std::vector<cx>& amps, int n, const std::vector<cx>& g,
                          const std::vector<int>& targets) {
  RQC_DISPATCH(apply_vec(amps, n, g, targets));
}

std::vector<cx> apply_mat(const std::vector<cx>& rho, int n, const std::vector<cx>& g,
                          const std::vector<int>& targets) {
  RQC_DISPATCH(apply_mat(rho, n, g, targets));
}

std::vector<cx> partial_trace(const std::vector<cx>& rho, int n, const std::vector<int>& keep) {
  RQC_DISPATCH(partial_trace(rho, n, keep));
}

std::vector<cx> partial_transpose(const std::vector<cx>& rho, int n,
                                  const std::vector<int>& subset) {
  RQC_DISPATCH(partial_transpose(rho, n, subset));
}

std::vector<cx> bell_collapse_mat(const std::vector<cx>& rho, int n, int p0, int p1,
                                  const std::array<cx, 4>& bell, double& weight) {
  RQC_DISPATCH(bell_collapse_mat(rho, n, p0, p1, bell, weight));
}

std::vector<cx> bell_collapse_vec(const std::vector<cx>& amps, int n, int p0, int p1,
                                  const std::array<cx, 4>& bell, double& weight) {
  RQC_DISPATCH(bell_collapse_vec(amps, n, p0, p1, bell, weight));
}

#undef RQC_DISPATCH

}  // namespace rqc::kernels
