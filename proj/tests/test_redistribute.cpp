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

#include <numbers>

#include "rqc/error.hpp"
#include "rqc/redistribute.hpp"
#include "testutil.hpp"

using namespace rqc;
using redistribute::ChiPrime;
using redistribute::ControlUnitary;
using states::InputAmplitudes;

namespace {
constexpr double kTol = 1e-12;

StateVector expansion_of(const StateVector& chi_prime, const QubitRegister& reg) {
  const StateVector b0 = states::phi_basis(0, reg);
  const StateVector b1 = states::phi_basis(1, reg);
  std::vector<cx> amps(8);
  for (std::size_t i = 0; i < 8; ++i) {
    amps[i] = chi_prime.amplitude(0) * b0.amplitude(i) + chi_prime.amplitude(1) * b1.amplitude(i);
  }
  return StateVector(reg, std::move(amps));
}
}  // namespace

TEST_CASE("ControlUnitary rejects non-unitary matrices") {
  CHECK_THROWS_AS(ControlUnitary({cx{1, 0}, cx{0, 0}, cx{0, 0}, cx{2, 0}}), NormalizationError);
  CHECK_NOTHROW(ControlUnitary::hadamard());
  CHECK_NOTHROW(ControlUnitary::phase(1.234));
}

TEST_CASE("apply_control conjugates the controller qubit") {
  const DensityOperator zero = promote(StateVector::basis({"D"}, 0));
  CHECK(test::max_abs_diff(
            redistribute::apply_control(zero, ControlUnitary::identity()).matrix(),
            zero.matrix()) < kTol);

  const DensityOperator one = redistribute::apply_control(zero, ControlUnitary::pauli_x());
  CHECK(std::abs(one.entry(1, 1) - cx{1, 0}) < kTol);

  const DensityOperator plus = redistribute::apply_control(zero, ControlUnitary::hadamard());
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) CHECK(std::abs(plus.entry(r, c) - cx{0.5, 0}) < kTol);
  }

  test::Rand rng(41);
  CHECK_THROWS_AS(
      redistribute::apply_control(rng.density(test::generic_register(2)), ControlUnitary::identity()),
      DimensionError);
}

TEST_CASE("chi_prime_presentation pins the global phase") {
  test::Rand rng(42);
  for (int i = 0; i < 12; ++i) {
    const auto amps = rng.real_pair();
    const Operator u = rng.unitary(1);
    std::array<cx, 4> um;
    for (int e = 0; e < 4; ++e) um[e] = u.matrix()[e];
    const ControlUnitary cu(um);

    const ChiPrime cp = redistribute::chi_prime_presentation(cu, amps);
    CHECK(cp.alpha_prime >= 0.0);
    CHECK(cp.beta_prime >= 0.0);
    CHECK(cp.theta > 0.0);
    CHECK(cp.theta <= 2.0 * std::numbers::pi + kTol);
    CHECK(std::abs(cp.alpha_prime * cp.alpha_prime + cp.beta_prime * cp.beta_prime - 1.0) < kTol);

    // The presentation reproduces U|chi> up to a global phase.
    const cx v0 = um[0] * amps.alpha + um[1] * amps.beta;
    const cx v1 = um[2] * amps.alpha + um[3] * amps.beta;
    const StateVector rebuilt = redistribute::chi_prime_state(cp, "D");
    const cx overlap = std::conj(rebuilt.amplitude(0)) * v0 + std::conj(rebuilt.amplitude(1)) * v1;
    CHECK(std::abs(std::abs(overlap) - 1.0) < kTol);
  }

  // beta' = 0 pins theta at 2*pi by convention.
  const ChiPrime degenerate = redistribute::chi_prime_presentation(
      ControlUnitary::identity(), InputAmplitudes::real(1.0, 0.0));
  CHECK(degenerate.beta_prime == 0.0);
  CHECK(degenerate.theta == 2.0 * std::numbers::pi);
}

TEST_CASE("distribution corrections match the four expansion branches") {
  // Branch signs worked out on the 8-amplitude expansion directly: the
  // Phi1 branch carries alpha phi0 - beta phi1 and is fixed by Z x Z x Z;
  // the Phi2 branch carries the basis swap and is fixed by X x X x X.
  const QubitRegister reg{"A'", "B'", "C'"};
  const StateVector b0 = states::phi_basis(0, reg);
  const StateVector b1 = states::phi_basis(1, reg);

  const cx a{0.6, 0.0};
  const cx b = std::polar(0.8, 1.1);
  std::vector<cx> plus(8), minus(8), swapped_plus(8), swapped_minus(8);
  for (std::size_t i = 0; i < 8; ++i) {
    plus[i] = a * b0.amplitude(i) + b * b1.amplitude(i);
    minus[i] = a * b0.amplitude(i) - b * b1.amplitude(i);
    swapped_plus[i] = a * b1.amplitude(i) + b * b0.amplitude(i);
    swapped_minus[i] = a * b1.amplitude(i) - b * b0.amplitude(i);
  }
  const StateVector target(reg, plus);

  auto correct_all = [&reg](const StateVector& s, Pauli p) {
    StateVector out = s;
    const Operator g = Operator::single_qubit(pauli_matrix2(p));
    for (const auto& q : reg.labels()) out = apply(out, g, {q});
    return out;
  };

  CHECK(redistribute::distribution_correction(Bell::Phi0) == Pauli::I);
  CHECK(redistribute::distribution_correction(Bell::Phi1) == Pauli::Z);
  CHECK(redistribute::distribution_correction(Bell::Phi2) == Pauli::X);
  CHECK(redistribute::distribution_correction(Bell::Phi3) == Pauli::ZX);

  const StateVector fixed1 = correct_all(StateVector(reg, minus), Pauli::Z);
  CHECK(std::abs(std::abs(fixed1.inner(target)) - 1.0) < kTol);
  const StateVector fixed2 = correct_all(StateVector(reg, swapped_plus), Pauli::X);
  CHECK(std::abs(std::abs(fixed2.inner(target)) - 1.0) < kTol);
  const StateVector fixed3 = correct_all(StateVector(reg, swapped_minus), Pauli::ZX);
  CHECK(std::abs(std::abs(fixed3.inner(target)) - 1.0) < kTol);
}

TEST_CASE("teleclone_out maps every outcome to the expansion of chi'") {
  test::Rand rng(43);
  for (int i = 0; i < 8; ++i) {
    const double t = rng.uniform() * std::numbers::pi / 2.0;
    const ChiPrime cp{std::cos(t), std::sin(t), rng.angle() + 1e-6};
    const StateVector chi_prime = redistribute::chi_prime_state(cp, "D");
    const StateVector target = expansion_of(chi_prime, {"A'", "B'", "C'"});

    for (int outcome = 0; outcome < 4; ++outcome) {
      const auto res =
          redistribute::teleclone_out(promote(chi_prime), states::distribution_resource(),
                                      bell_from_index(outcome), nullptr);
      CHECK(std::abs(res.probability - 0.25) < kTol);
      CHECK(std::abs(fidelity(res.psi_prime, target) - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("teleclone_out degenerate input lands exactly on phi_basis(0)") {
  const auto res = redistribute::teleclone_out(
      promote(StateVector::basis({"D"}, 0)), states::distribution_resource(), Bell::Phi2, nullptr);
  CHECK(std::abs(fidelity(res.psi_prime, states::phi_basis(0, {"A'", "B'", "C'"})) - 1.0) < kTol);
}

TEST_CASE("corrected output is outcome-independent and receiver-symmetric") {
  const ChiPrime cp{0.28, 0.96, 2.5};
  const StateVector chi_prime = redistribute::chi_prime_state(cp, "D");
  const DensityOperator d = promote(chi_prime);

  std::vector<DensityOperator> outs;
  for (int outcome = 0; outcome < 4; ++outcome) {
    outs.push_back(redistribute::teleclone_out(d, states::distribution_resource(),
                                               bell_from_index(outcome), nullptr)
                       .psi_prime);
  }
  for (int i = 1; i < 4; ++i) CHECK(trace_distance(outs[0], outs[i]) < kTol);

  // B' <-> C' exchange symmetry.
  const DensityOperator swapped = partial_trace(outs[0], {"A'", "C'", "B'"});
  CHECK(test::max_abs_diff(swapped.matrix(), outs[0].matrix()) < kTol);

  const auto [rb, rc] = redistribute::receiver_marginals(outs[0]);
  CHECK(std::abs(fidelity(rb, redistribute::chi_prime_state(cp, "B'")) - 5.0 / 6.0) < 1e-10);
  CHECK(std::abs(fidelity(rc, redistribute::chi_prime_state(cp, "C'")) - 5.0 / 6.0) < 1e-10);
}

TEST_CASE("receiver marginals are diag(5/6, 1/6) for chi' = |0>") {
  const auto res = redistribute::teleclone_out(
      promote(StateVector::basis({"D"}, 0)), states::distribution_resource(), Bell::Phi0, nullptr);
  const auto [rb, rc] = redistribute::receiver_marginals(res.psi_prime);
  for (const auto& m : {rb, rc}) {
    CHECK(std::abs(m.entry(0, 0) - cx{5.0 / 6.0, 0}) < kTol);
    CHECK(std::abs(m.entry(1, 1) - cx{1.0 / 6.0, 0}) < kTol);
    CHECK(std::abs(m.entry(0, 1)) < kTol);
  }
}

TEST_CASE("marginals transform as U rho U^dag end to end") {
  test::Rand rng(44);
  for (int i = 0; i < 6; ++i) {
    const auto amps = rng.real_pair();
    const Operator u = rng.unitary(1);
    std::array<cx, 4> um;
    for (int e = 0; e < 4; ++e) um[e] = u.matrix()[e];
    const ControlUnitary cu(um);

    // Direct conjugation of the stage-1 clone marginal...
    const DensityOperator rho = promote(states::telecloned_input(amps));
    const DensityOperator expect_b = apply(partial_trace(rho, {"B"}), u, {"B"});

    // ...versus the redistributed output.
    const DensityOperator d = promote(amps.chi("D"));
    const DensityOperator controlled = redistribute::apply_control(d, cu);
    const auto res = redistribute::teleclone_out(controlled, states::distribution_resource(),
                                                 Bell::Phi1, nullptr);
    const auto [rb, rc] = redistribute::receiver_marginals(res.psi_prime);
    CHECK(trace_distance(rb, expect_b) < 1e-10);
  }
}
