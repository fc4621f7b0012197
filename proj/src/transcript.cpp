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

#include <charconv>
#include <cstdlib>
#include <sstream>

#include "rqc/detail/fmt.hpp"
#include "rqc/error.hpp"
#include "rqc/transcript.hpp"

namespace rqc::locc {

using detail::fmt17;

std::string party_name(PartyId p) {
  switch (p) {
    case PartyId::controller:
      return "Controller";
    case PartyId::alice:
      return "Alice";
    case PartyId::bob:
      return "Bob";
    case PartyId::charlie:
      return "Charlie";
  }
  throw Error("unreachable PartyId");
}

PartyId party_from_name(const std::string& name) {
  if (name == "Controller") return PartyId::controller;
  if (name == "Alice") return PartyId::alice;
  if (name == "Bob") return PartyId::bob;
  if (name == "Charlie") return PartyId::charlie;
  throw TranscriptError("unknown party '" + name + "'");
}

int Transcript::append(std::variant<LocalOp, Measurement, Message> body) {
  const int round = static_cast<int>(events.size());
  events.push_back(Event{round, std::move(body)});
  return round;
}

void Transcript::append_fragment(std::vector<Event> fragment) {
  const int offset = static_cast<int>(events.size());
  for (Event& ev : fragment) {
    ev.round += offset;
    if (auto* op = std::get_if<LocalOp>(&ev.body)) {
      for (int& u : op->uses) u += offset;
    }
    events.push_back(std::move(ev));
  }
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw TranscriptError("bad number '" + s + "'");
  return v;
}

int parse_int(const std::string& s) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw TranscriptError("bad integer '" + s + "'");
  }
  return v;
}

int parse_outcome(const std::string& s) {
  const int v = parse_int(s);
  if (v < 0 || v > 3) throw TranscriptError("outcome out of range '" + s + "'");
  return v;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

// Op descriptor with dependencies: "<name>" or "<name>;uses=r1,r2".
std::string op_field(const LocalOp& op) {
  std::string out = op.op;
  if (!op.uses.empty()) {
    out += ";uses=";
    for (std::size_t i = 0; i < op.uses.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(op.uses[i]);
    }
  }
  return out;
}

void parse_op_field(const std::string& field, LocalOp& op) {
  const std::size_t sep = field.find(";uses=");
  if (sep == std::string::npos) {
    op.op = field;
    return;
  }
  op.op = field.substr(0, sep);
  for (const std::string& u : split(field.substr(sep + 6), ',')) {
    op.uses.push_back(parse_int(u));
  }
}

}  // namespace

std::string to_text(const Transcript& t) {
  std::ostringstream out;
  out << "rqc-transcript v1\n";
  out << "seed " << t.seed << "\n";
  out << "input " << fmt17(t.input.alpha.real()) << ' ' << fmt17(t.input.alpha.imag()) << ' '
      << fmt17(t.input.beta.real()) << ' ' << fmt17(t.input.beta.imag()) << ' '
      << (t.input.complex_mode ? "complex" : "real") << "\n";
  out << "unitary";
  for (const cx& v : t.unitary) out << ' ' << fmt17(v.real()) << ' ' << fmt17(v.imag());
  out << "\n";
  out << "events " << t.events.size() << "\n";
  for (const Event& ev : t.events) {
    out << ev.round << ' ';
    if (const auto* m = std::get_if<Measurement>(&ev.body)) {
      out << party_name(m->party) << " measure " << m->q0 << ',' << m->q1 << ' ' << m->outcome
          << ' ' << fmt17(m->probability);
    } else if (const auto* msg = std::get_if<Message>(&ev.body)) {
      out << party_name(msg->from) << " send "
          << (msg->to.has_value() ? party_name(*msg->to) : std::string("broadcast")) << ' '
          << msg->payload << " -";
    } else {
      const auto& op = std::get<LocalOp>(ev.body);
      out << party_name(op.party) << " apply " << join(op.targets, ',') << ' ' << op_field(op)
          << " -";
    }
    out << "\n";
  }
  return out.str();
}

Transcript from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto next_line = [&]() {
    if (!std::getline(in, line)) throw TranscriptError("truncated transcript");
    return line;
  };

  if (next_line() != "rqc-transcript v1") throw TranscriptError("bad transcript header");

  Transcript t;
  {
    const auto f = split(next_line(), ' ');
    if (f.size() != 2 || f[0] != "seed") throw TranscriptError("bad seed line");
    t.seed = std::strtoull(f[1].c_str(), nullptr, 10);
  }
  {
    const auto f = split(next_line(), ' ');
    if (f.size() != 6 || f[0] != "input") throw TranscriptError("bad input line");
    const cx alpha{parse_double(f[1]), parse_double(f[2])};
    const cx beta{parse_double(f[3]), parse_double(f[4])};
    if (f[5] == "complex") {
      t.input = states::InputAmplitudes::complex_amplitudes(alpha, beta);
    } else if (f[5] == "real") {
      t.input = states::InputAmplitudes::real(alpha.real(), beta.real());
    } else {
      throw TranscriptError("bad input mode '" + f[5] + "'");
    }
  }
  {
    const auto f = split(next_line(), ' ');
    if (f.size() != 9 || f[0] != "unitary") throw TranscriptError("bad unitary line");
    for (int i = 0; i < 4; ++i) {
      t.unitary[i] = cx{parse_double(f[1 + 2 * i]), parse_double(f[2 + 2 * i])};
    }
  }
  std::size_t count = 0;
  {
    const auto f = split(next_line(), ' ');
    if (f.size() != 2 || f[0] != "events") throw TranscriptError("bad events line");
    count = static_cast<std::size_t>(parse_int(f[1]));
  }

  for (std::size_t i = 0; i < count; ++i) {
    const auto f = split(next_line(), ' ');
    if (f.size() != 6) throw TranscriptError("event line needs 6 fields");
    const int round = parse_int(f[0]);
    if (round != static_cast<int>(i)) throw TranscriptError("event rounds out of order");
    const PartyId party = party_from_name(f[1]);
    const std::string& kind = f[2];
    if (kind == "measure") {
      const auto qs = split(f[3], ',');
      if (qs.size() != 2) throw TranscriptError("measure needs two targets");
      t.events.push_back(Event{
          round, Measurement{party, qs[0], qs[1], parse_outcome(f[4]), parse_double(f[5])}});
    } else if (kind == "send") {
      Message msg{party, std::nullopt, parse_outcome(f[4])};
      if (f[3] != "broadcast") msg.to = party_from_name(f[3]);
      if (f[5] != "-") throw TranscriptError("send carries no probability");
      t.events.push_back(Event{round, std::move(msg)});
    } else if (kind == "apply") {
      LocalOp op;
      op.party = party;
      for (const auto& q : split(f[3], ',')) op.targets.push_back(q);
      parse_op_field(f[4], op);
      if (f[5] != "-") throw TranscriptError("apply carries no probability");
      t.events.push_back(Event{round, std::move(op)});
    } else {
      throw TranscriptError("unknown event kind '" + kind + "'");
    }
  }
  if (std::getline(in, line) && !line.empty()) throw TranscriptError("trailing transcript data");
  return t;
}

}  // namespace rqc::locc
