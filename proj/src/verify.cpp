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
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "rqc/detail/fmt.hpp"
#include "rqc/eig.hpp"
#include "rqc/error.hpp"
#include "rqc/locc.hpp"
#include "rqc/verify.hpp"

namespace rqc::verify {

namespace {

using concentrate::OutcomeTriple;
using states::InputAmplitudes;

constexpr double kTight = 1e-12;
constexpr double kCloneFidelity = 5.0 / 6.0;

std::string g3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return std::string(buf);
}

InputAmplitudes random_real_pair(OutcomeRng& rng) {
  const double t = rng.uniform() * 2.0 * std::numbers::pi;
  return InputAmplitudes::real(std::cos(t), std::sin(t));
}

redistribute::ControlUnitary random_unitary(OutcomeRng& rng) {
  const double t = std::asin(std::sqrt(rng.uniform()));
  const double p1 = rng.uniform() * 2.0 * std::numbers::pi;
  const double p2 = rng.uniform() * 2.0 * std::numbers::pi;
  const double c = std::cos(t), s = std::sin(t);
  return redistribute::ControlUnitary({std::polar(c, p1), std::polar(s, p2),
                                       -std::polar(s, -p2), std::polar(c, -p1)});
}

CheckResult check_clone_fidelity(const VerifyOptions& opt) {
  OutcomeRng rng(opt.seed ^ 0x1);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const InputAmplitudes amps = random_real_pair(rng);
    const DensityOperator rho = promote(states::telecloned_input(amps));
    const double fb = fidelity(partial_trace(rho, {"B"}), amps.chi("B"));
    const double fc = fidelity(partial_trace(rho, {"C"}), amps.chi("C"));
    worst = std::max({worst, std::abs(fb - kCloneFidelity), std::abs(fc - kCloneFidelity)});
  }
  return {"clone_fidelity", worst <= opt.tolerance,
          "50 random inputs, worst |F - 5/6| = " + g3(worst)};
}

CheckResult check_basis_consistency(const VerifyOptions& opt) {
  const StateVector p0 = states::phi_basis(0);
  const StateVector p1 = states::phi_basis(1);
  const double tol = std::min(kTight, opt.tolerance);

  bool pass = true;
  std::ostringstream detail;

  const double n0 = std::abs(p0.norm() - 1.0);
  const double n1 = std::abs(p1.norm() - 1.0);
  const double overlap = std::abs(p0.inner(p1));
  pass = pass && n0 <= tol && n1 <= tol && overlap <= tol;
  detail << "orthonormality dev " << g3(std::max({n0, n1, overlap}));

  // The variant whose last term is |111> instead of |110> is not a valid
  // basis: its overlap with phi_basis(1) is exactly 1/3.
  std::vector<cx> bad(8, cx{0, 0});
  bad[0b000] = std::sqrt(2.0 / 3.0);
  bad[0b101] = std::sqrt(1.0 / 6.0);
  bad[0b111] = std::sqrt(1.0 / 6.0);
  const StateVector variant(QubitRegister{"A", "B", "C"}, std::move(bad));
  const double bad_overlap = std::abs(variant.inner(p1));
  pass = pass && std::abs(bad_overlap - 1.0 / 3.0) <= tol;
  detail << "; |111>-variant overlap " << g3(bad_overlap) << " (rejected)";

  // The corrected basis reproduces the 5/6 marginals.
  double worst = 0.0;
  OutcomeRng rng(opt.seed ^ 0x2);
  for (int i = 0; i < 5; ++i) {
    const InputAmplitudes amps = random_real_pair(rng);
    const DensityOperator rho = promote(states::telecloned_input(amps));
    worst = std::max(worst,
                     std::abs(fidelity(partial_trace(rho, {"B"}), amps.chi("B")) - kCloneFidelity));
  }
  pass = pass && worst <= opt.tolerance;
  detail << "; marginal dev " << g3(worst);
  return {"basis_consistency", pass, detail.str()};
}

CheckResult check_class_table(const VerifyOptions&) {
  // The sixteen class-I triples, as listed in the outcome table.
  static constexpr int kClassITriples[16][3] = {
      {0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {2, 2, 0}, {2, 3, 1}, {3, 2, 1}, {3, 3, 0},
      {0, 2, 2}, {0, 3, 3}, {1, 2, 3}, {1, 3, 2}, {2, 0, 2}, {2, 1, 3}, {3, 0, 3}, {3, 1, 2},
  };

  std::array<int, 4> counts{};
  std::set<int> class_one;
  for (int p = 0; p < 64; ++p) {
    const OutcomeTriple t = OutcomeTriple::from_packed(p);
    const auto cls = concentrate::outcome_class(t);
    ++counts[static_cast<int>(cls)];
    if (cls == concentrate::OutcomeClass::I) class_one.insert(p);
  }

  std::set<int> expected;
  for (const auto& t : kClassITriples) {
    expected.insert(OutcomeTriple{bell_from_index(t[0]), bell_from_index(t[1]),
                                  bell_from_index(t[2])}
                        .packed());
  }

  const bool pass =
      counts == std::array<int, 4>{16, 16, 16, 16} && class_one == expected;
  return {"class_table", pass,
          "class sizes " + std::to_string(counts[0]) + "/" + std::to_string(counts[1]) + "/" +
              std::to_string(counts[2]) + "/" + std::to_string(counts[3]) +
              (class_one == expected ? ", class-I set matches the listed 16 triples"
                                     : ", class-I set MISMATCH")};
}

CheckResult check_concentration_certainty(const VerifyOptions& opt) {
  OutcomeRng rng(opt.seed ^ 0x3);
  double worst_fid = 0.0, worst_prob = 0.0;
  for (int i = 0; i < 20; ++i) {
    const InputAmplitudes amps = random_real_pair(rng);
    for (const auto& row : concentrate::enumerate_concentration(amps)) {
      worst_fid = std::max(worst_fid, std::abs(row.post_correction_fidelity - 1.0));
      worst_prob = std::max(worst_prob, std::abs(row.probability - 1.0 / 64.0));
    }
  }
  const bool pass = worst_fid <= opt.tolerance && worst_prob <= std::min(kTight, opt.tolerance);
  return {"concentration_certainty", pass,
          "20 inputs x 64 forced triples, worst |F-1| = " + g3(worst_fid) +
              ", worst |p-1/64| = " + g3(worst_prob)};
}

CheckResult check_redistribution(const VerifyOptions& opt) {
  OutcomeRng rng(opt.seed ^ 0x4);
  double worst_fid = 0.0, worst_prob = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double t = rng.uniform() * std::numbers::pi / 2.0;
    const double theta = rng.uniform() * 2.0 * std::numbers::pi;
    const redistribute::ChiPrime cp{std::cos(t), std::sin(t), theta > 0 ? theta : 2 * std::numbers::pi};
    const StateVector chi_prime = redistribute::chi_prime_state(cp, "D");
    const DensityOperator d_state = promote(chi_prime);

    // Target state: the telecloning expansion of chi'.
    const QubitRegister out_reg{"A'", "B'", "C'"};
    const StateVector b0 = states::phi_basis(0, out_reg);
    const StateVector b1 = states::phi_basis(1, out_reg);
    std::vector<cx> target(8);
    for (std::size_t k = 0; k < 8; ++k) {
      target[k] = chi_prime.amplitude(0) * b0.amplitude(k) +
                  chi_prime.amplitude(1) * b1.amplitude(k);
    }
    const StateVector psi_target(out_reg, std::move(target));

    for (int outcome = 0; outcome < 4; ++outcome) {
      const auto res = redistribute::teleclone_out(d_state, states::distribution_resource(),
                                                   bell_from_index(outcome), nullptr);
      worst_fid = std::max(worst_fid, std::abs(fidelity(res.psi_prime, psi_target) - 1.0));
      worst_prob = std::max(worst_prob, std::abs(res.probability - 0.25));
    }
  }
  const bool pass = worst_fid <= opt.tolerance && worst_prob <= std::min(kTight, opt.tolerance);
  return {"redistribution_exactness", pass,
          "20 transforms x 4 outcomes, worst |F-1| = " + g3(worst_fid) +
              ", worst |p-1/4| = " + g3(worst_prob)};
}

CheckResult check_control_theorem(const VerifyOptions& opt) {
  OutcomeRng rng(opt.seed ^ 0x5);
  double worst = 0.0;
  bool all_pass = true;
  for (int i = 0; i < opt.trials; ++i) {
    const InputAmplitudes amps = random_real_pair(rng);
    const redistribute::ControlUnitary u = random_unitary(rng);
    const std::uint64_t seed = static_cast<std::uint64_t>(rng.uniform() * 9.0e15);
    const auto [report, transcript] = locc::run_protocol(amps, u, seed, opt.tolerance);
    worst = std::max(worst, report.trace_distance_theorem);
    all_pass = all_pass && report.pass;
  }
  return {"control_theorem", all_pass && worst <= opt.tolerance,
          std::to_string(opt.trials) + " random (input, unitary, seed) runs, worst distance " +
              g3(worst)};
}

CheckResult check_smolin(const VerifyOptions& opt) {
  const DensityOperator rho = states::smolin();
  const double tol = std::min(kTight, opt.tolerance);
  bool pass = true;
  std::ostringstream detail;

  // (1/16)(I + X^4 + Y^4 + Z^4), built from Pauli tensor powers.
  {
    const std::array<cx, 4> x = pauli_matrix2(Pauli::X);
    const std::array<cx, 4> z = pauli_matrix2(Pauli::Z);
    std::array<cx, 4> y{};  // i * ZX
    {
      const std::array<cx, 4> zx = pauli_matrix2(Pauli::ZX);
      for (int i = 0; i < 4; ++i) y[i] = cx{0, 1} * zx[i];
    }
    auto tensor4 = [](const std::array<cx, 4>& m) {
      std::vector<cx> acc(m.begin(), m.end());
      for (int i = 0; i < 3; ++i) {
        acc = kernels::kron_mat(acc, std::size_t{1} << (i + 1), {m.begin(), m.end()}, 2);
      }
      return acc;
    };
    const auto xs = tensor4(x), ys = tensor4(y), zs = tensor4(z);
    double dev = 0.0;
    for (std::size_t i = 0; i < 256; ++i) {
      cx expect = (xs[i] + ys[i] + zs[i]) / 16.0;
      if (i % 17 == 0) expect += 1.0 / 16.0;  // the identity's diagonal
      dev = std::max(dev, std::abs(rho.matrix()[i] - expect));
    }
    pass = pass && dev <= tol;
    detail << "Pauli-sum dev " << g3(dev);
  }

  // Every two-qubit marginal is maximally mixed.
  {
    double dev = 0.0;
    const auto& labels = rho.reg().labels();
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        const DensityOperator m = partial_trace(rho, {labels[i], labels[j]});
        for (std::size_t r = 0; r < 4; ++r) {
          for (std::size_t c = 0; c < 4; ++c) {
            const cx expect = (r == c) ? cx{0.25, 0} : cx{0, 0};
            dev = std::max(dev, std::abs(m.entry(r, c) - expect));
          }
        }
      }
    }
    pass = pass && dev <= tol;
    detail << "; marginal dev " << g3(dev);
  }

  // Positive partial transpose across every two-qubit cut, negative with
  // minimum eigenvalue -1/8 across every single-qubit cut.
  {
    const std::vector<std::vector<QubitLabel>> halves = {{"D", "E"}, {"D", "F"}, {"D", "G"}};
    double min22 = 0.0;
    for (const auto& cut : halves) {
      min22 = std::min(min22, min_eigenvalue(partial_transpose(rho, cut)));
    }
    pass = pass && min22 >= -tol;
    double dev13 = 0.0;
    for (const auto& q : rho.reg().labels()) {
      dev13 = std::max(dev13,
                       std::abs(min_eigenvalue(partial_transpose(rho, {q})) + 0.125));
    }
    pass = pass && dev13 <= opt.tolerance;
    detail << "; 2:2 PT min " << g3(min22) << "; 1:3 PT dev from -1/8 " << g3(dev13);
  }

  // Unlockability: a Bell measurement on (D,E) leaves (F,G) in the same
  // Bell state, each outcome with probability 1/4.
  {
    double dev = 0.0;
    for (int i = 0; i < 4; ++i) {
      const auto m = bell_measure(rho, {"D", "E"}, bell_from_index(i), nullptr);
      const double f =
          fidelity(m.post, states::bell_state(bell_from_index(i), {"F", "G"}));
      dev = std::max({dev, std::abs(m.probability - 0.25), std::abs(f - 1.0)});
    }
    pass = pass && dev <= tol;
    detail << "; unlock dev " << g3(dev);
  }

  return {"smolin_properties", pass, detail.str()};
}

CheckResult check_locc_discipline(const VerifyOptions& opt) {
  OutcomeRng rng(opt.seed ^ 0x6);
  bool pass = true;
  std::ostringstream detail;
  int runs = 24;
  double worst_replay = 0.0;
  for (int i = 0; i < runs; ++i) {
    const InputAmplitudes amps = random_real_pair(rng);
    const redistribute::ControlUnitary u = random_unitary(rng);
    const auto [report, transcript] = locc::run_protocol(amps, u, opt.seed + i, opt.tolerance);

    if (locc::ownership_check(transcript).has_value()) {
      pass = false;
      detail << "ownership violation at run " << i << "; ";
      break;
    }
    const locc::ClassicalCost cost = locc::classical_cost(transcript);
    if (cost.messages_to_controller != 3 || cost.broadcasts != 1 || cost.total_bits != 8) {
      pass = false;
      detail << "classical cost " << cost.total_bits << " bits at run " << i << "; ";
      break;
    }
    const std::string text = locc::to_text(transcript);
    if (locc::to_text(locc::from_text(text)) != text) {
      pass = false;
      detail << "transcript round-trip mismatch at run " << i << "; ";
      break;
    }
    const locc::ProtocolReport again = locc::replay(transcript, opt.tolerance);
    const double drift = std::max(
        {std::abs(again.fidelity_d - report.fidelity_d),
         std::abs(again.fidelity_b_prime - report.fidelity_b_prime),
         std::abs(again.fidelity_c_prime - report.fidelity_c_prime),
         std::abs(again.trace_distance_theorem - report.trace_distance_theorem)});
    worst_replay = std::max(worst_replay, drift);
    if (drift > 1e-14 || again.triple != report.triple ||
        again.distribution_outcome != report.distribution_outcome) {
      pass = false;
      detail << "replay drift " << g3(drift) << " at run " << i << "; ";
      break;
    }
  }
  if (pass) {
    detail << runs << " runs: ownership clean, cost 3x2+2 bits, replay drift "
           << g3(worst_replay);
  }
  return {"locc_discipline", pass, detail.str()};
}

CheckResult check_outcome_statistics(const VerifyOptions& opt) {
  const int n = opt.monte_carlo_runs;
  std::array<long, 64> triple_counts{};
  std::array<long, 4> dist_counts{};

  const InputAmplitudes amps = InputAmplitudes::real(0.6, 0.8);
  const redistribute::ControlUnitary u = redistribute::ControlUnitary::hadamard();

#pragma omp parallel
  {
    std::array<long, 64> local_triples{};
    std::array<long, 4> local_dist{};
#pragma omp for schedule(static)
    for (int i = 0; i < n; ++i) {
      const auto [report, transcript] =
          locc::run_protocol(amps, u, opt.seed * 1000003ULL + i, opt.tolerance);
      ++local_triples[report.triple.packed()];
      ++local_dist[index_of(report.distribution_outcome)];
    }
#pragma omp critical
    {
      for (int k = 0; k < 64; ++k) triple_counts[k] += local_triples[k];
      for (int k = 0; k < 4; ++k) dist_counts[k] += local_dist[k];
    }
  }

  const double sigma_triple = std::sqrt(n * (1.0 / 64.0) * (63.0 / 64.0));
  const double sigma_dist = std::sqrt(n * 0.25 * 0.75);
  double worst_triple = 0.0, worst_dist = 0.0;
  for (long c : triple_counts) {
    worst_triple = std::max(worst_triple, std::abs(c - n / 64.0) / sigma_triple);
  }
  for (long c : dist_counts) {
    worst_dist = std::max(worst_dist, std::abs(c - n / 4.0) / sigma_dist);
  }
  const bool pass = worst_triple <= 4.0 && worst_dist <= 4.0;
  return {"outcome_statistics", pass,
          std::to_string(n) + " runs, worst triple deviation " + g3(worst_triple) +
              " sigma, worst distribution deviation " + g3(worst_dist) + " sigma"};
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  if (options.trials < 1) throw Error("trials must be at least 1");
  if (options.monte_carlo_runs < 1) throw Error("monte_carlo_runs must be at least 1");
  return {
      check_clone_fidelity(options),        check_basis_consistency(options),
      check_class_table(options),           check_concentration_certainty(options),
      check_redistribution(options),        check_control_theorem(options),
      check_smolin(options),                check_locc_discipline(options),
      check_outcome_statistics(options),
  };
}

}  // namespace rqc::verify
