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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rqc/eig.hpp"
#include "rqc/error.hpp"
#include "rqc/measure.hpp"
#include "rqc/states.hpp"
#include "testutil.hpp"

using namespace rqc;
using states::InputAmplitudes;

namespace {
constexpr double kTol = 1e-12;

// Expected clone marginal: (5/6)|chi><chi| + (1/6)|chi_perp><chi_perp|.
DensityOperator expected_clone(const InputAmplitudes& amps, const QubitLabel& q) {
  const StateVector chi = amps.chi(q);
  const StateVector perp = amps.chi_orthogonal(q);
  std::vector<cx> m(4);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      m[r * 2 + c] = (5.0 / 6.0) * chi.amplitude(r) * std::conj(chi.amplitude(c)) +
                     (1.0 / 6.0) * perp.amplitude(r) * std::conj(perp.amplitude(c));
    }
  }
  return DensityOperator({q}, std::move(m));
}

}  // namespace

TEST_CASE("phi_basis is orthonormal and swapped by X on all three qubits") {
  const StateVector p0 = states::phi_basis(0);
  const StateVector p1 = states::phi_basis(1);
  CHECK(std::abs(p0.norm() - 1.0) < kTol);
  CHECK(std::abs(p1.norm() - 1.0) < kTol);
  CHECK(std::abs(p0.inner(p1)) < kTol);

  StateVector swapped = p0;
  const Operator x = Operator::single_qubit(pauli_matrix2(Pauli::X));
  for (const auto& q : p0.reg().labels()) swapped = apply(swapped, x, {q});
  CHECK(std::abs(std::abs(swapped.inner(p1)) - 1.0) < kTol);

  CHECK_THROWS_AS(states::phi_basis(2), Error);
}

TEST_CASE("the |111> variant of phi_basis(0) is not orthogonal to phi_basis(1)") {
  std::vector<cx> bad(8, cx{0, 0});
  bad[0b000] = std::sqrt(2.0 / 3.0);
  bad[0b101] = std::sqrt(1.0 / 6.0);
  bad[0b111] = std::sqrt(1.0 / 6.0);
  const StateVector variant({"A", "B", "C"}, std::move(bad));
  const cx overlap = variant.inner(states::phi_basis(1));
  CHECK(std::abs(overlap - cx{1.0 / 3.0, 0}) < kTol);  // = sqrt(1/9)
}

TEST_CASE("telecloned_input marginals carry fidelity 5/6 on both receivers") {
  const auto endpoints = {InputAmplitudes::real(1.0, 0.0), InputAmplitudes::real(0.0, 1.0),
                          InputAmplitudes::real(3.0 / 5.0, 4.0 / 5.0)};
  for (const auto& amps : endpoints) {
    const DensityOperator rho = promote(states::telecloned_input(amps));
    for (const QubitLabel q : {QubitLabel("B"), QubitLabel("C")}) {
      const DensityOperator marginal = partial_trace(rho, {q});
      CHECK(std::abs(fidelity(marginal, amps.chi(q)) - 5.0 / 6.0) < 1e-10);
      CHECK(test::max_abs_diff(marginal.matrix(), expected_clone(amps, q).matrix()) < kTol);
    }
  }

  // Property over random real pairs.
  test::Rand rng(21);
  for (int i = 0; i < 12; ++i) {
    const auto amps = rng.real_pair();
    const DensityOperator rho = promote(states::telecloned_input(amps));
    CHECK(test::max_abs_diff(partial_trace(rho, {"B"}).matrix(),
                             expected_clone(amps, "B").matrix()) < kTol);
    CHECK(test::max_abs_diff(partial_trace(rho, {"C"}).matrix(),
                             expected_clone(amps, "C").matrix()) < kTol);
  }

  CHECK(std::abs(states::telecloned_input(InputAmplitudes::real(1.0, 0.0))
                     .inner(states::phi_basis(0)) -
                 cx{1, 0}) < kTol);
  CHECK_THROWS_AS(InputAmplitudes::real(1.0, 1.0), NormalizationError);
}

TEST_CASE("clone marginal formula also holds for complex amplitudes") {
  test::Rand rng(22);
  for (int i = 0; i < 6; ++i) {
    const cx a = std::polar(std::cos(rng.angle() / 4.0), rng.angle());
    const double rest = std::sqrt(std::max(0.0, 1.0 - std::norm(a)));
    const cx b = std::polar(rest, rng.angle());
    const auto amps = InputAmplitudes::complex_amplitudes(a, b);
    const DensityOperator rho = promote(states::telecloned_input(amps));
    CHECK(test::max_abs_diff(partial_trace(rho, {"B"}).matrix(),
                             expected_clone(amps, "B").matrix()) < kTol);
  }
}

TEST_CASE("bell_state family is orthonormal") {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const cx ov = states::bell_state(bell_from_index(i), {"X", "Y"})
                        .inner(states::bell_state(bell_from_index(j), {"X", "Y"}));
      CHECK(std::abs(ov - (i == j ? cx{1, 0} : cx{0, 0})) < kTol);
    }
  }
}

TEST_CASE("smolin state structure") {
  const DensityOperator rho = states::smolin();
  CHECK(std::abs(rho.trace_real() - 1.0) < kTol);
  CHECK_NOTHROW(rho.assert_positive());

  // Rank 4 with flat spectrum {1/4 x4, 0 x12}.
  const auto evs = hermitian_eigenvalues(rho.matrix(), 16);
  for (int i = 0; i < 12; ++i) CHECK(std::abs(evs[i]) < kTol);
  for (int i = 12; i < 16; ++i) CHECK(std::abs(evs[i] - 0.25) < kTol);

  // Party-swap invariance: partial_trace with a permuted keep list is a
  // qubit permutation when nothing is traced out.
  const DensityOperator pair_swap = partial_trace(rho, {"F", "G", "D", "E"});
  CHECK(test::max_abs_diff(pair_swap.matrix(), rho.matrix()) < kTol);
  const DensityOperator in_pair_swap = partial_trace(rho, {"E", "D", "F", "G"});
  CHECK(test::max_abs_diff(in_pair_swap.matrix(), rho.matrix()) < kTol);
  const DensityOperator cross_swap = partial_trace(rho, {"D", "F", "E", "G"});
  CHECK(test::max_abs_diff(cross_swap.matrix(), rho.matrix()) < kTol);

  // Every two-qubit marginal is I/4.
  const auto& labels = rho.reg().labels();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j) continue;
      const DensityOperator m = partial_trace(rho, {labels[i], labels[j]});
      CHECK(test::max_abs_diff(m.matrix(), DensityOperator::maximally_mixed({"x", "y"}).matrix()) <
            kTol);
    }
  }

  // PPT across the three 2:2 cuts, -1/8 across every 1:3 cut.
  const std::vector<std::vector<QubitLabel>> halves = {{"D", "E"}, {"D", "F"}, {"D", "G"}};
  for (const auto& cut : halves) {
    CHECK(min_eigenvalue(partial_transpose(rho, cut)) >= -kTol);
  }
  for (const auto& q : labels) {
    CHECK(std::abs(min_eigenvalue(partial_transpose(rho, {q})) + 0.125) < 1e-10);
  }
}

TEST_CASE("smolin unlockability") {
  const DensityOperator rho = states::smolin();
  for (int i = 0; i < 4; ++i) {
    const auto m = bell_measure(rho, {"D", "E"}, bell_from_index(i), nullptr);
    CHECK(std::abs(m.probability - 0.25) < kTol);
    CHECK(std::abs(fidelity(m.post, states::bell_state(bell_from_index(i), {"F", "G"})) - 1.0) <
          kTol);
  }
}

TEST_CASE("distribution_resource marginals and projections") {
  const StateVector res = states::distribution_resource();
  CHECK(std::abs(res.norm() - 1.0) < kTol);

  const DensityOperator p = partial_trace(promote(res), {"P"});
  CHECK(test::max_abs_diff(p.matrix(), DensityOperator::maximally_mixed({"P"}).matrix()) < kTol);

  // Projecting P on |0> leaves phi_basis(0) on the receivers.
  std::vector<cx> projected(8);
  for (std::size_t i = 0; i < 8; ++i) projected[i] = res.amplitude(i) * std::sqrt(2.0);
  const StateVector tail({"A'", "B'", "C'"}, std::move(projected));
  CHECK(std::abs(std::abs(tail.inner(states::phi_basis(0, {"A'", "B'", "C'"}))) - 1.0) < kTol);
}
