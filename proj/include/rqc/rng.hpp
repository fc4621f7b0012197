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

#include <cstdint>
#include <random>
#include <span>

namespace rqc {

// Seeded outcome source with a fixed, documented mapping so transcripts are
// portable across implementations:
//   - generator: std::mt19937_64 seeded directly with the 64-bit seed
//     (the engine's output sequence is pinned by the C++ standard);
//   - uniform doubles: (next() >> 11) * 2^-53, i.e. the top 53 bits;
//   - discrete outcomes: inverse-CDF walk over the probabilities in index
//     order, returning the first i with u < p_0 + ... + p_i.
// std::uniform_real_distribution and friends are deliberately avoided; their
// output is not specified across standard libraries.
class OutcomeRng {
 public:
  explicit OutcomeRng(std::uint64_t seed) : gen_(seed) {}

  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Sample an index from a (near-)normalized probability vector.
  int pick(std::span<const double> probs) {
    const double u = uniform();
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      acc += probs[i] > 0.0 ? probs[i] : 0.0;
      if (u < acc) return static_cast<int>(i);
    }
    return static_cast<int>(probs.size()) - 1;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace rqc
