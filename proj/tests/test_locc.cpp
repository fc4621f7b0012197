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

#include <set>

#include "rqc/error.hpp"
#include "rqc/locc.hpp"
#include "testutil.hpp"

using namespace rqc;
using locc::Event;
using locc::LocalOp;
using locc::Measurement;
using locc::Message;
using locc::PartyId;
using locc::Transcript;
using redistribute::ControlUnitary;
using states::InputAmplitudes;

TEST_CASE("run_protocol endpoints") {
  const auto [report, transcript] =
      locc::run_protocol(InputAmplitudes::real(1.0, 0.0), ControlUnitary::identity(), 5);
  CHECK(report.pass);
  CHECK(report.fidelity_d == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(report.fidelity_b_prime == doctest::Approx(5.0 / 6.0).epsilon(1e-10));
  CHECK(report.fidelity_c_prime == doctest::Approx(5.0 / 6.0).epsilon(1e-10));
  CHECK(report.trace_distance_theorem <= 1e-10);
  CHECK(transcript.events.size() == 13);  // 4 measurements, 4 messages, 5 local ops

  // X control on |0>: the clones carry |1> with fidelity 5/6.
  const auto [rx, tx] =
      locc::run_protocol(InputAmplitudes::real(1.0, 0.0), ControlUnitary::pauli_x(), 5);
  CHECK(rx.pass);
  CHECK(rx.fidelity_b_prime == doctest::Approx(5.0 / 6.0).epsilon(1e-10));
}

TEST_CASE("same seed, same transcript and report") {
  const auto amps = InputAmplitudes::real(0.6, 0.8);
  const ControlUnitary u = ControlUnitary::hadamard();
  const auto [r1, t1] = locc::run_protocol(amps, u, 12345);
  const auto [r2, t2] = locc::run_protocol(amps, u, 12345);
  CHECK(locc::to_text(t1) == locc::to_text(t2));
  CHECK(r1.triple == r2.triple);
  CHECK(r1.distribution_outcome == r2.distribution_outcome);
  CHECK(r1.fidelity_b_prime == r2.fidelity_b_prime);

  const auto [r3, t3] = locc::run_protocol(amps, u, 12346);
  CHECK(locc::to_text(t1) != locc::to_text(t3));  // same math, different outcomes
  CHECK(r3.pass);
}

TEST_CASE("transcripts round-trip through text byte-exactly") {
  test::Rand rng(51);
  for (int i = 0; i < 4; ++i) {
    const auto [report, transcript] =
        locc::run_protocol(rng.real_pair(), ControlUnitary::phase(rng.angle()), 100 + i);
    const std::string text = locc::to_text(transcript);
    const Transcript parsed = locc::from_text(text);
    CHECK(locc::to_text(parsed) == text);
    CHECK(parsed.seed == transcript.seed);
    CHECK(parsed.events.size() == transcript.events.size());
  }
}

TEST_CASE("from_text rejects malformed input") {
  CHECK_THROWS_AS(locc::from_text("garbage"), TranscriptError);
  CHECK_THROWS_AS(locc::from_text("rqc-transcript v1\nseed 1\n"), TranscriptError);

  const auto [report, transcript] =
      locc::run_protocol(InputAmplitudes::real(0.6, 0.8), ControlUnitary::identity(), 3);
  std::string text = locc::to_text(transcript);
  CHECK_THROWS_AS(locc::from_text(text + "extra line\n"), TranscriptError);

  // Outcome out of range.
  const auto pos = text.find("measure");
  REQUIRE(pos != std::string::npos);
  std::string corrupted = text;
  const auto outfield = corrupted.find(' ', corrupted.find(',', pos));  // after targets
  corrupted[outfield + 1] = '7';
  CHECK_THROWS_AS(locc::from_text(corrupted), TranscriptError);
}

TEST_CASE("generated transcripts satisfy the LOCC discipline") {
  test::Rand rng(52);
  for (int i = 0; i < 6; ++i) {
    const auto [report, transcript] =
        locc::run_protocol(rng.real_pair(), ControlUnitary::hadamard(), 500 + i);
    CHECK(!locc::ownership_check(transcript).has_value());
    const auto cost = locc::classical_cost(transcript);
    CHECK(cost.messages_to_controller == 3);
    CHECK(cost.broadcasts == 1);
    CHECK(cost.total_bits == 8);
  }
}

TEST_CASE("ownership_check flags foreign qubits") {
  Transcript t;
  t.input = InputAmplitudes::real(1.0, 0.0);
  // Alice measuring (A, F): F belongs to Bob.
  t.append(Measurement{PartyId::alice, "A", "F", 0, 0.25});
  const auto v = locc::ownership_check(t);
  REQUIRE(v.has_value());
  CHECK(v->round == 0);
  CHECK(v->reason.find("Alice") != std::string::npos);
}

TEST_CASE("ownership_check flags corrections ahead of their messages") {
  Transcript t;
  t.input = InputAmplitudes::real(1.0, 0.0);
  t.append(Measurement{PartyId::alice, "A", "E", 0, 0.25});
  t.append(Message{PartyId::alice, PartyId::controller, 0});
  // Controller corrects after only one of the three reports.
  t.append(LocalOp{PartyId::controller, "correct:0", {"D"}, {1}});
  const auto v = locc::ownership_check(t);
  REQUIRE(v.has_value());
  CHECK(v->reason.find("three reports") != std::string::npos);

  // A forward reference is just as bad.
  Transcript t2;
  t2.input = InputAmplitudes::real(1.0, 0.0);
  t2.append(LocalOp{PartyId::controller, "correct:0", {"D"}, {1}});
  t2.append(Message{PartyId::alice, PartyId::controller, 0});
  CHECK(locc::ownership_check(t2).has_value());

  // Receiver correction without the broadcast.
  Transcript t3;
  t3.input = InputAmplitudes::real(1.0, 0.0);
  t3.append(Message{PartyId::bob, PartyId::controller, 1});
  t3.append(LocalOp{PartyId::alice, "correct:1", {"A'"}, {0}});
  const auto v3 = locc::ownership_check(t3);
  REQUIRE(v3.has_value());
  CHECK(v3->reason.find("broadcast") != std::string::npos);
}

TEST_CASE("ownership_check flags oversized payloads") {
  Transcript t;
  t.input = InputAmplitudes::real(1.0, 0.0);
  t.append(Message{PartyId::alice, PartyId::controller, 9});
  CHECK(locc::ownership_check(t).has_value());
}

TEST_CASE("replay reproduces reports exactly") {
  test::Rand rng(53);
  for (int i = 0; i < 5; ++i) {
    const auto amps = rng.real_pair();
    const Operator u = rng.unitary(1);
    std::array<cx, 4> um;
    for (int e = 0; e < 4; ++e) um[e] = u.matrix()[e];
    const auto [report, transcript] = locc::run_protocol(amps, ControlUnitary(um), 900 + i);

    const locc::ProtocolReport again = locc::replay(transcript);
    CHECK(again.triple == report.triple);
    CHECK(again.distribution_outcome == report.distribution_outcome);
    CHECK(std::abs(again.fidelity_d - report.fidelity_d) <= 1e-14);
    CHECK(std::abs(again.fidelity_b_prime - report.fidelity_b_prime) <= 1e-14);
    CHECK(std::abs(again.fidelity_c_prime - report.fidelity_c_prime) <= 1e-14);
    CHECK(std::abs(again.trace_distance_theorem - report.trace_distance_theorem) <= 1e-14);
    CHECK(again.pass == report.pass);
  }
}

TEST_CASE("replay rejects corrupted transcripts") {
  const auto [report, transcript] =
      locc::run_protocol(InputAmplitudes::real(0.6, 0.8), ControlUnitary::hadamard(), 77);

  // A drifted probability no longer matches the recomputed Born value.
  Transcript corrupted = transcript;
  for (Event& ev : corrupted.events) {
    if (auto* m = std::get_if<Measurement>(&ev.body)) {
      m->probability = 0.9;
      break;
    }
  }
  CHECK_THROWS_AS(locc::replay(corrupted), TranscriptError);

  // Too few measurement events.
  Transcript truncated = transcript;
  truncated.events.resize(2);
  CHECK_THROWS_AS(locc::replay(truncated), TranscriptError);
}

TEST_CASE("replay stays exact across outcome classes") {
  // Sweep seeds until every outcome class has been hit at least once.
  std::set<int> classes_seen;
  for (int seed = 0; seed < 40 && classes_seen.size() < 4; ++seed) {
    const auto [report, transcript] =
        locc::run_protocol(InputAmplitudes::real(0.8, -0.6), ControlUnitary::pauli_z(), seed);
    classes_seen.insert(static_cast<int>(concentrate::outcome_class(report.triple)));
    const auto again = locc::replay(transcript);
    CHECK(std::abs(again.fidelity_b_prime - report.fidelity_b_prime) <= 1e-14);
  }
  CHECK(classes_seen.size() == 4);
}

TEST_CASE("party ownership table matches the protocol layout") {
  const auto& parties = locc::protocol_parties();
  REQUIRE(parties.size() == 4);
  CHECK(parties[0].owned == std::vector<QubitLabel>{"D", "P"});
  CHECK(parties[1].owned == std::vector<QubitLabel>{"A", "E", "A'"});
  CHECK(parties[2].owned == std::vector<QubitLabel>{"B", "F", "B'"});
  CHECK(parties[3].owned == std::vector<QubitLabel>{"C", "G", "C'"});
}
