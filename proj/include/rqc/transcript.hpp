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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rqc/pauli.hpp"
#include "rqc/register.hpp"
#include "rqc/states.hpp"

namespace rqc::locc {

enum class PartyId : int { controller = 0, alice = 1, bob = 2, charlie = 3 };

std::string party_name(PartyId p);
PartyId party_from_name(const std::string& name);

// A unitary applied by one party to its own qubits. `op` is a short
// descriptor ("control", or "correct:<pauli index>"); `uses` lists the
// rounds of the classical messages the choice of operation depended on.
struct LocalOp {
  PartyId party;
  std::string op;
  std::vector<QubitLabel> targets;
  std::vector<int> uses;
};

// A Bell-state measurement of two qubits owned by `party`.
struct Measurement {
  PartyId party;
  QubitLabel q0, q1;
  int outcome = 0;          // Bell index 0..3
  double probability = 0.0; // Born probability given everything before it
};

// A two-bit classical message; `to` empty means broadcast.
struct Message {
  PartyId from;
  std::optional<PartyId> to;
  int payload = 0;  // Bell index 0..3
};

struct Event {
  int round = 0;  // position in the transcript, assigned on append
  std::variant<LocalOp, Measurement, Message> body;
};

// Complete, replayable record of one protocol run: the classical inputs
// plus every local operation, measurement outcome and message in order.
struct Transcript {
  std::uint64_t seed = 0;
  states::InputAmplitudes input;
  std::array<cx, 4> unitary{cx{1, 0}, cx{0, 0}, cx{0, 0}, cx{1, 0}};
  std::vector<Event> events;

  // Appends with round = current event count; returns the assigned round.
  int append(std::variant<LocalOp, Measurement, Message> body);
  // Appends a fragment produced by a protocol stage, shifting its rounds and
  // `uses` references past the events already present.
  void append_fragment(std::vector<Event> fragment);
};

// Line-delimited text form, one event per line with fields in fixed order
// (round, party, kind, targets, outcome, probability); see README for the
// format. to_text(from_text(s)) == s for every serialized transcript.
std::string to_text(const Transcript& t);
Transcript from_text(const std::string& text);  // throws TranscriptError

}  // namespace rqc::locc
