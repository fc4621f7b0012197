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
#include <set>

#include "rqc/error.hpp"
#include "rqc/locc.hpp"

namespace rqc::locc {

const std::array<Party, 4>& protocol_parties() {
  static const std::array<Party, 4> parties = {
      Party{PartyId::controller, {"D", "P"}},
      Party{PartyId::alice, {"A", "E", "A'"}},
      Party{PartyId::bob, {"B", "F", "B'"}},
      Party{PartyId::charlie, {"C", "G", "C'"}},
  };
  return parties;
}

namespace {

constexpr double kCloneFidelity = 5.0 / 6.0;
constexpr double kReplayTolerance = 1e-14;

struct ForcedOutcomes {
  concentrate::OutcomeTriple triple;
  Bell distribution;
};

std::pair<ProtocolReport, Transcript> run_impl(const states::InputAmplitudes& amps,
                                               const redistribute::ControlUnitary& u,
                                               std::uint64_t seed, double tolerance,
                                               const std::optional<ForcedOutcomes>& forced) {
  OutcomeRng rng(seed);
  Transcript t;
  t.seed = seed;
  t.input = amps;
  t.unitary = u.matrix();

  // Stage 1: remote concentration onto the controller's qubit D.
  const StateVector psi = states::telecloned_input(amps);
  const StateVector chi_d = amps.chi("D");
  auto conc = concentrate::concentrate(
      psi, states::smolin(),
      forced.has_value() ? std::optional(forced->triple) : std::nullopt, &rng);
  t.append_fragment(std::move(conc.events));

  // Stage 2: the control unitary, a purely local operation on D.
  const DensityOperator chi_prime_d = redistribute::apply_control(conc.d_state, u);
  t.append(LocalOp{PartyId::controller, "control", {"D"}, {}});

  // Stage 3: teleclone the transformed qubit back out to the receivers.
  auto tel = redistribute::teleclone_out(
      chi_prime_d, states::distribution_resource(),
      forced.has_value() ? std::optional(forced->distribution) : std::nullopt, &rng);
  t.append_fragment(std::move(tel.events));

  const auto [rho_b_prime, rho_c_prime] = redistribute::receiver_marginals(tel.psi_prime);

  // The transformed reference states U|chi> and U rho U^dag.
  const std::array<cx, 4>& m = u.matrix();
  const cx v0 = m[0] * amps.alpha + m[1] * amps.beta;
  const cx v1 = m[2] * amps.alpha + m[3] * amps.beta;
  const DensityOperator rho_psi = promote(psi);
  const Operator uop = u.op();
  const DensityOperator rho_b_transformed =
      apply(partial_trace(rho_psi, {"B"}), uop, {"B"});
  const DensityOperator rho_c_transformed =
      apply(partial_trace(rho_psi, {"C"}), uop, {"C"});

  ProtocolReport report;
  report.seed = seed;
  report.tolerance = tolerance;
  report.input = amps;
  report.unitary = u.matrix();
  report.triple = conc.outcome;
  report.distribution_outcome = tel.outcome;
  report.fidelity_d = fidelity(conc.d_state, chi_d);
  report.fidelity_b_prime =
      fidelity(rho_b_prime, StateVector(QubitRegister{"B'"}, {v0, v1}));
  report.fidelity_c_prime =
      fidelity(rho_c_prime, StateVector(QubitRegister{"C'"}, {v0, v1}));
  report.trace_distance_theorem =
      std::max(trace_distance(rho_b_prime, rho_b_transformed),
               trace_distance(rho_c_prime, rho_c_transformed));
  report.pass = std::abs(report.fidelity_d - 1.0) <= tolerance &&
                std::abs(report.fidelity_b_prime - kCloneFidelity) <= tolerance &&
                std::abs(report.fidelity_c_prime - kCloneFidelity) <= tolerance &&
                std::abs(report.fidelity_b_prime - report.fidelity_c_prime) <= tolerance &&
                report.trace_distance_theorem <= tolerance;
  return {report, std::move(t)};
}

}  // namespace

std::pair<ProtocolReport, Transcript> run_protocol(const states::InputAmplitudes& amps,
                                                   const redistribute::ControlUnitary& u,
                                                   std::uint64_t seed, double tolerance) {
  return run_impl(amps, u, seed, tolerance, std::nullopt);
}

namespace {

const std::vector<QubitLabel>& owned_by(PartyId id) {
  for (const Party& p : protocol_parties()) {
    if (p.id == id) return p.owned;
  }
  throw Error("unreachable party lookup");
}

bool owns_all(PartyId id, const std::vector<QubitLabel>& targets) {
  const auto& owned = owned_by(id);
  return std::all_of(targets.begin(), targets.end(), [&owned](const QubitLabel& q) {
    return std::find(owned.begin(), owned.end(), q) != owned.end();
  });
}

}  // namespace

std::optional<Violation> ownership_check(const Transcript& t) {
  std::array<int, 4> last_send_round = {-1, -1, -1, -1};
  for (const Event& ev : t.events) {
    if (const auto* m = std::get_if<Measurement>(&ev.body)) {
      if (!owns_all(m->party, {m->q0, m->q1})) {
        return Violation{ev.round, party_name(m->party) + " measured unowned qubits " + m->q0 +
                                       "," + m->q1};
      }
      if (m->outcome < 0 || m->outcome > 3) {
        return Violation{ev.round, "measurement outcome out of range"};
      }
    } else if (const auto* msg = std::get_if<Message>(&ev.body)) {
      if (msg->payload < 0 || msg->payload > 3) {
        return Violation{ev.round, "message payload exceeds two bits"};
      }
      int& last = last_send_round[static_cast<int>(msg->from)];
      if (ev.round <= last) {
        return Violation{ev.round, "sender rounds not strictly increasing"};
      }
      last = ev.round;
    } else {
      const auto& op = std::get<LocalOp>(ev.body);
      if (!owns_all(op.party, op.targets)) {
        return Violation{ev.round, party_name(op.party) + " applied to unowned qubits"};
      }
      if (op.op.rfind("correct", 0) == 0) {
        // A correction depends on remote outcomes: the messages it cites
        // must exist, precede it, and be addressed to the acting party.
        std::set<PartyId> senders;
        for (int use : op.uses) {
          if (use < 0 || use >= ev.round ||
              use >= static_cast<int>(t.events.size())) {
            return Violation{ev.round, "correction cites a message not yet received"};
          }
          const auto* used = std::get_if<Message>(&t.events[use].body);
          if (used == nullptr) {
            return Violation{ev.round, "correction cites a non-message event"};
          }
          if (used->to.has_value() && *used->to != op.party) {
            return Violation{ev.round, "correction cites a message for another party"};
          }
          senders.insert(used->from);
        }
        if (op.party == PartyId::controller) {
          const bool all_three = senders.count(PartyId::alice) != 0 &&
                                 senders.count(PartyId::bob) != 0 &&
                                 senders.count(PartyId::charlie) != 0;
          if (!all_three) {
            return Violation{ev.round,
                             "controller corrected before receiving all three reports"};
          }
        } else if (senders.count(PartyId::controller) == 0) {
          return Violation{ev.round, "receiver corrected without the broadcast"};
        }
      }
    }
  }
  return std::nullopt;
}

ClassicalCost classical_cost(const Transcript& t) {
  ClassicalCost cost;
  for (const Event& ev : t.events) {
    const auto* msg = std::get_if<Message>(&ev.body);
    if (msg == nullptr) continue;
    cost.total_bits += 2;
    if (!msg->to.has_value()) {
      ++cost.broadcasts;
    } else if (*msg->to == PartyId::controller) {
      ++cost.messages_to_controller;
    }
  }
  return cost;
}

ProtocolReport replay(const Transcript& t, double tolerance) {
  // Collect the recorded outcomes: three stage-1 measurements then the
  // distribution measurement.
  std::vector<const Measurement*> measures;
  for (const Event& ev : t.events) {
    if (const auto* m = std::get_if<Measurement>(&ev.body)) measures.push_back(m);
  }
  if (measures.size() != 4) {
    throw TranscriptError("expected 4 measurement events, found " +
                          std::to_string(measures.size()));
  }

  ForcedOutcomes forced;
  forced.triple = concentrate::OutcomeTriple{bell_from_index(measures[0]->outcome),
                                             bell_from_index(measures[1]->outcome),
                                             bell_from_index(measures[2]->outcome)};
  forced.distribution = bell_from_index(measures[3]->outcome);

  std::pair<ProtocolReport, Transcript> rerun;
  try {
    rerun = run_impl(t.input, redistribute::ControlUnitary(t.unitary), t.seed, tolerance, forced);
  } catch (const ImpossibleOutcomeError& e) {
    throw TranscriptError(std::string("transcript/state mismatch: ") + e.what());
  }

  // Recomputed Born probabilities must match the recorded ones.
  std::vector<const Measurement*> redone;
  for (const Event& ev : rerun.second.events) {
    if (const auto* m = std::get_if<Measurement>(&ev.body)) redone.push_back(m);
  }
  for (std::size_t i = 0; i < measures.size(); ++i) {
    if (std::abs(redone[i]->probability - measures[i]->probability) > kReplayTolerance) {
      throw TranscriptError("transcript/state mismatch: probability drift at measurement " +
                            std::to_string(i));
    }
  }
  return rerun.first;
}

}  // namespace rqc::locc
