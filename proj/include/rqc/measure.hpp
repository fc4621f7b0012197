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
#include <optional>
#include <utility>

#include "rqc/ops.hpp"
#include "rqc/pauli.hpp"
#include "rqc/rng.hpp"

namespace rqc {

inline constexpr double kOutcomeProbabilityFloor = 1e-14;

using QubitPair = std::pair<QubitLabel, QubitLabel>;

// Born probabilities of the four Bell outcomes on the given pair.
std::array<double, 4> bell_probabilities(const DensityOperator& rho, const QubitPair& pair);
std::array<double, 4> bell_probabilities(const StateVector& psi, const QubitPair& pair);

struct BellMeasurement {
  Bell outcome;
  double probability;     // Born probability of the outcome
  DensityOperator post;   // normalized, measured pair removed
};

// Projective Bell-state measurement of the pair. When `forced` is given the
// outcome is taken as-is (its probability must exceed the floor, else
// ImpossibleOutcomeError); otherwise it is sampled from `rng`, which must be
// non-null.
BellMeasurement bell_measure(const DensityOperator& rho, const QubitPair& pair,
                             std::optional<Bell> forced = std::nullopt,
                             OutcomeRng* rng = nullptr);
BellMeasurement bell_measure(const StateVector& psi, const QubitPair& pair,
                             std::optional<Bell> forced = std::nullopt,
                             OutcomeRng* rng = nullptr);

// Pure-state variant that keeps the post-state as a vector; used by the
// branch-unraveling cross checks.
struct PureBellMeasurement {
  Bell outcome;
  double probability;
  StateVector post;
};
PureBellMeasurement bell_measure_pure(const StateVector& psi, const QubitPair& pair,
                                      std::optional<Bell> forced = std::nullopt,
                                      OutcomeRng* rng = nullptr);

}  // namespace rqc
