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

#include "rqc/concentrate.hpp"
#include "rqc/redistribute.hpp"
#include "rqc/transcript.hpp"

namespace rqc::locc {

// Protocol orchestration. A single referee holds the global state and
// resolves measurement outcomes; parties only ever touch their own qubits,
// and every cross-party dependency is a recorded two-bit message. The
// transcript is the evidence that the run respected that discipline.

struct Party {
  PartyId id;
  std::vector<QubitLabel> owned;
};

// Fixed ownership: Controller {D, P}, Alice {A, E, A'}, Bob {B, F, B'},
// Charlie {C, G, C'}.
const std::array<Party, 4>& protocol_parties();

struct ProtocolReport {
  std::uint64_t seed = 0;
  double tolerance = 1e-10;
  states::InputAmplitudes input;
  std::array<cx, 4> unitary{};
  concentrate::OutcomeTriple triple;
  Bell distribution_outcome = Bell::Phi0;
  double fidelity_d = 0.0;        // D against |chi> after stage 1
  double fidelity_b_prime = 0.0;  // B' against U|chi> (5/6 when exact)
  double fidelity_c_prime = 0.0;
  // max over B', C' of trace_distance(rho', U rho U^dag)
  double trace_distance_theorem = 0.0;
  bool pass = false;
};

// Full protocol run with sampled outcomes: concentration, control unitary,
// redistribution. The report's pass flag requires fidelity_d within
// tolerance of 1, both clone fidelities within tolerance of 5/6 and of each
// other, and the theorem distance below tolerance.
std::pair<ProtocolReport, Transcript> run_protocol(const states::InputAmplitudes& amps,
                                                   const redistribute::ControlUnitary& u,
                                                   std::uint64_t seed,
                                                   double tolerance = 1e-10);

struct Violation {
  int round = -1;
  std::string reason;
};

// Checks that every operation touches only qubits owned by the acting party
// and that classically-dependent operations cite messages that were actually
// delivered to the actor earlier in the transcript (the controller's stage-1
// correction needs reports from all three receivers; receiver corrections
// need the controller's broadcast). Returns the first violation, or nullopt.
std::optional<Violation> ownership_check(const Transcript& t);

struct ClassicalCost {
  int messages_to_controller = 0;
  int broadcasts = 0;
  int total_bits = 0;  // two bits per message
};

ClassicalCost classical_cost(const Transcript& t);

// Re-executes the run with every outcome forced from the transcript.
// Throws TranscriptError if a recorded outcome is impossible in the
// reconstructed state or its probability has drifted beyond 1e-14.
ProtocolReport replay(const Transcript& t, double tolerance = 1e-10);

}  // namespace rqc::locc
