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

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "rqc/ops.hpp"
#include "rqc/states.hpp"

namespace rqc::test {

// Seeded generator helpers for property-style tests.
class Rand {
 public:
  explicit Rand(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double angle() { return uniform() * 2.0 * std::numbers::pi; }

  double normal() {
    const double u1 = std::max(uniform(), 1e-300);
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  cx cnormal() { return cx{normal(), normal()}; }

  states::InputAmplitudes real_pair() {
    const double t = angle();
    return states::InputAmplitudes::real(std::cos(t), std::sin(t));
  }

  std::vector<cx> state_amplitudes(int n) {
    std::vector<cx> amps(std::size_t{1} << n);
    double norm2 = 0.0;
    for (cx& a : amps) {
      a = cnormal();
      norm2 += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (cx& a : amps) a *= scale;
    return amps;
  }

  StateVector state(QubitRegister reg) {
    auto amps = state_amplitudes(reg.size());
    return StateVector(std::move(reg), std::move(amps));
  }

  // Mixture of `rank` random pure states.
  DensityOperator density(QubitRegister reg, int rank = 3) {
    const std::size_t d = reg.dim();
    std::vector<double> w(rank);
    double total = 0.0;
    for (double& x : w) {
      x = uniform() + 1e-3;
      total += x;
    }
    std::vector<cx> m(d * d, cx{0, 0});
    for (int k = 0; k < rank; ++k) {
      const auto amps = state_amplitudes(reg.size());
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
          m[r * d + c] += (w[k] / total) * amps[r] * std::conj(amps[c]);
        }
      }
    }
    return DensityOperator(std::move(reg), std::move(m));
  }

  // Haar-ish k-qubit unitary via QR of a complex Ginibre matrix.
  Operator unitary(int qubits) {
    const std::size_t d = std::size_t{1} << qubits;
    Eigen::MatrixXcd a(d, d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) a(r, c) = cnormal();
    }
    const Eigen::MatrixXcd q =
        Eigen::HouseholderQR<Eigen::MatrixXcd>(a).householderQ();
    std::vector<cx> m(d * d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) m[r * d + c] = q(r, c);
    }
    return Operator(qubits, std::move(m));
  }

 private:
  std::mt19937_64 gen_;
};

inline double max_abs_diff(const std::vector<cx>& a, const std::vector<cx>& b) {
  if (a.size() != b.size()) return 1e300;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

// Register of n qubits labeled q0..q{n-1}.
inline QubitRegister generic_register(int n) {
  std::vector<QubitLabel> labels;
  for (int i = 0; i < n; ++i) labels.push_back("q" + std::to_string(i));
  return QubitRegister(std::move(labels));
}

}  // namespace rqc::test
