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

#include <cmath>

#include "rqc/error.hpp"
#include "rqc/measure.hpp"

namespace rqc {

namespace {

std::pair<int, int> pair_positions(const QubitRegister& reg, const QubitPair& pair) {
  if (pair.first == pair.second) throw LabelError("Bell measurement needs two distinct qubits");
  return {reg.position(pair.first), reg.position(pair.second)};
}

int resolve_outcome(const std::array<double, 4>& probs, std::optional<Bell> forced,
                    OutcomeRng* rng) {
  if (forced.has_value()) {
    const int i = index_of(*forced);
    if (probs[i] <= kOutcomeProbabilityFloor) {
      throw ImpossibleOutcomeError("forced Bell outcome " + std::to_string(i) +
                                   " has probability " + std::to_string(probs[i]));
    }
    return i;
  }
  if (rng == nullptr) throw Error("sampled Bell measurement requires a random source");
  return rng->pick(probs);
}

}  // namespace

std::array<double, 4> bell_probabilities(const DensityOperator& rho, const QubitPair& pair) {
  const auto [p0, p1] = pair_positions(rho.reg(), pair);
  std::array<double, 4> probs{};
  for (int l = 0; l < 4; ++l) {
    double w = 0.0;
    kernels::bell_collapse_mat(rho.matrix(), rho.qubits(), p0, p1,
                               bell_amplitudes(bell_from_index(l)), w);
    probs[l] = w;
  }
  return probs;
}

std::array<double, 4> bell_probabilities(const StateVector& psi, const QubitPair& pair) {
  const auto [p0, p1] = pair_positions(psi.reg(), pair);
  std::array<double, 4> probs{};
  for (int l = 0; l < 4; ++l) {
    double w = 0.0;
    kernels::bell_collapse_vec(psi.amplitudes(), psi.qubits(), p0, p1,
                               bell_amplitudes(bell_from_index(l)), w);
    probs[l] = w;
  }
  return probs;
}

BellMeasurement bell_measure(const DensityOperator& rho, const QubitPair& pair,
                             std::optional<Bell> forced, OutcomeRng* rng) {
  const auto [p0, p1] = pair_positions(rho.reg(), pair);
  const std::array<double, 4> probs = bell_probabilities(rho, pair);
  const int outcome = resolve_outcome(probs, forced, rng);

  double weight = 0.0;
  std::vector<cx> post = kernels::bell_collapse_mat(
      rho.matrix(), rho.qubits(), p0, p1, bell_amplitudes(bell_from_index(outcome)), weight);
  if (weight <= kOutcomeProbabilityFloor) {
    throw ImpossibleOutcomeError("Bell outcome has vanishing probability");
  }
  for (cx& v : post) v /= weight;
  QubitRegister rest = rho.reg().without({pair.first, pair.second});
  return BellMeasurement{bell_from_index(outcome), probs[outcome],
                         DensityOperator::unchecked(std::move(rest), std::move(post))};
}

BellMeasurement bell_measure(const StateVector& psi, const QubitPair& pair,
                             std::optional<Bell> forced, OutcomeRng* rng) {
  PureBellMeasurement pure = bell_measure_pure(psi, pair, forced, rng);
  return BellMeasurement{pure.outcome, pure.probability, promote(pure.post)};
}

PureBellMeasurement bell_measure_pure(const StateVector& psi, const QubitPair& pair,
                                      std::optional<Bell> forced, OutcomeRng* rng) {
  const auto [p0, p1] = pair_positions(psi.reg(), pair);
  const std::array<double, 4> probs = bell_probabilities(psi, pair);
  const int outcome = resolve_outcome(probs, forced, rng);

  double weight = 0.0;
  std::vector<cx> post = kernels::bell_collapse_vec(
      psi.amplitudes(), psi.qubits(), p0, p1, bell_amplitudes(bell_from_index(outcome)), weight);
  if (weight <= kOutcomeProbabilityFloor) {
    throw ImpossibleOutcomeError("Bell outcome has vanishing probability");
  }
  const double scale = 1.0 / std::sqrt(weight);
  for (cx& v : post) v *= scale;
  QubitRegister rest = psi.reg().without({pair.first, pair.second});
  return PureBellMeasurement{bell_from_index(outcome), probs[outcome],
                             StateVector::unchecked(std::move(rest), std::move(post))};
}

}  // namespace rqc
