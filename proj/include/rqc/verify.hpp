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
#include <string>
#include <vector>

namespace rqc::verify {

// The end-to-end verification suite. Each check is a self-contained
// protocol property; the acceptance harness and `rqc verify` both run the
// full list and report one line per check.

struct VerifyOptions {
  // Bound for fidelity deviations and trace distances. Probability,
  // orthonormality and matrix-identity checks carry tighter fixed bounds
  // (1e-12), which this option can only tighten further, never loosen.
  double tolerance = 1e-10;
  // Number of random (alpha, beta, U, seed) draws for the end-to-end
  // transformation check.
  int trials = 100;
  std::uint64_t seed = 20260801;
  // Sampled runs for the outcome-statistics check.
  int monte_carlo_runs = 6400;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs every check in order. Throws rqc::Error on invalid options
// (trials < 1 or monte_carlo_runs < 1).
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace rqc::verify
