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

#include <sstream>

#include "rqc/detail/fmt.hpp"
#include "rqc/error.hpp"
#include "rqc/report_io.hpp"

namespace rqc::report_io {

using detail::fmt17;

Format format_from_name(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw Error("unknown format '" + name + "' (expected json or csv)");
}

namespace {

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string unitary_json(const std::array<cx, 4>& u) {
  std::ostringstream out;
  out << "[";
  for (int r = 0; r < 2; ++r) {
    out << (r ? ", [" : "[");
    for (int c = 0; c < 2; ++c) {
      const cx v = u[r * 2 + c];
      out << (c ? ", [" : "[") << fmt17(v.real()) << ", " << fmt17(v.imag()) << "]";
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

const char* class_name(concentrate::OutcomeClass c) {
  switch (c) {
    case concentrate::OutcomeClass::I:
      return "I";
    case concentrate::OutcomeClass::II:
      return "II";
    case concentrate::OutcomeClass::III:
      return "III";
    case concentrate::OutcomeClass::IV:
      return "IV";
  }
  return "?";
}

}  // namespace

std::string protocol_report(const locc::ProtocolReport& r, Format f) {
  const auto cls = concentrate::outcome_class(r.triple);
  if (f == Format::json) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"schema\": \"rqc-report-v1\",\n";
    out << "  \"seed\": " << r.seed << ",\n";
    out << "  \"tolerance\": " << fmt17(r.tolerance) << ",\n";
    out << "  \"alpha\": [" << fmt17(r.input.alpha.real()) << ", " << fmt17(r.input.alpha.imag())
        << "],\n";
    out << "  \"beta\": [" << fmt17(r.input.beta.real()) << ", " << fmt17(r.input.beta.imag())
        << "],\n";
    out << "  \"unitary\": " << unitary_json(r.unitary) << ",\n";
    out << "  \"outcome_ae\": " << index_of(r.triple.ae) << ",\n";
    out << "  \"outcome_bf\": " << index_of(r.triple.bf) << ",\n";
    out << "  \"outcome_cg\": " << index_of(r.triple.cg) << ",\n";
    out << "  \"outcome_class\": " << json_string(class_name(cls)) << ",\n";
    out << "  \"outcome_dp\": " << index_of(r.distribution_outcome) << ",\n";
    out << "  \"fidelity_d\": " << fmt17(r.fidelity_d) << ",\n";
    out << "  \"fidelity_b_prime\": " << fmt17(r.fidelity_b_prime) << ",\n";
    out << "  \"fidelity_c_prime\": " << fmt17(r.fidelity_c_prime) << ",\n";
    out << "  \"trace_distance_theorem\": " << fmt17(r.trace_distance_theorem) << ",\n";
    out << "  \"pass\": " << (r.pass ? "true" : "false") << "\n";
    out << "}\n";
    return out.str();
  }
  std::ostringstream out;
  out << "seed,tolerance,alpha_re,alpha_im,beta_re,beta_im,"
         "u00_re,u00_im,u01_re,u01_im,u10_re,u10_im,u11_re,u11_im,"
         "outcome_ae,outcome_bf,outcome_cg,outcome_class,outcome_dp,"
         "fidelity_d,fidelity_b_prime,fidelity_c_prime,trace_distance_theorem,pass\n";
  out << r.seed << ',' << fmt17(r.tolerance) << ',' << fmt17(r.input.alpha.real()) << ','
      << fmt17(r.input.alpha.imag()) << ',' << fmt17(r.input.beta.real()) << ','
      << fmt17(r.input.beta.imag());
  for (const cx& v : r.unitary) out << ',' << fmt17(v.real()) << ',' << fmt17(v.imag());
  out << ',' << index_of(r.triple.ae) << ',' << index_of(r.triple.bf) << ','
      << index_of(r.triple.cg) << ',' << class_name(cls) << ','
      << index_of(r.distribution_outcome) << ',' << fmt17(r.fidelity_d) << ','
      << fmt17(r.fidelity_b_prime) << ',' << fmt17(r.fidelity_c_prime) << ','
      << fmt17(r.trace_distance_theorem) << ',' << (r.pass ? "true" : "false") << '\n';
  return out.str();
}

std::string check_results(const std::vector<verify::CheckResult>& checks,
                          const verify::VerifyOptions& options, Format f) {
  if (f == Format::json) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"schema\": \"rqc-verify-v1\",\n";
    out << "  \"tolerance\": " << fmt17(options.tolerance) << ",\n";
    out << "  \"trials\": " << options.trials << ",\n";
    out << "  \"seed\": " << options.seed << ",\n";
    out << "  \"checks\": [\n";
    for (std::size_t i = 0; i < checks.size(); ++i) {
      out << "    {\"name\": " << json_string(checks[i].name)
          << ", \"pass\": " << (checks[i].pass ? "true" : "false")
          << ", \"detail\": " << json_string(checks[i].detail) << "}"
          << (i + 1 < checks.size() ? "," : "") << "\n";
    }
    out << "  ]\n}\n";
    return out.str();
  }
  std::ostringstream out;
  out << "name,pass,detail\n";
  for (const auto& c : checks) {
    std::string detail = c.detail;
    for (char& ch : detail) {
      if (ch == ',') ch = ';';
    }
    out << c.name << ',' << (c.pass ? "true" : "false") << ',' << detail << '\n';
  }
  return out.str();
}

std::string class_table(Format f) {
  std::ostringstream out;
  if (f == Format::json) {
    out << "[\n";
    for (int p = 0; p < 64; ++p) {
      const auto t = concentrate::OutcomeTriple::from_packed(p);
      out << "  {\"ae\": " << index_of(t.ae) << ", \"bf\": " << index_of(t.bf)
          << ", \"cg\": " << index_of(t.cg)
          << ", \"class\": " << json_string(class_name(concentrate::outcome_class(t))) << "}"
          << (p + 1 < 64 ? "," : "") << "\n";
    }
    out << "]\n";
    return out.str();
  }
  out << "ae,bf,cg,class\n";
  for (int p = 0; p < 64; ++p) {
    const auto t = concentrate::OutcomeTriple::from_packed(p);
    out << index_of(t.ae) << ',' << index_of(t.bf) << ',' << index_of(t.cg) << ','
        << class_name(concentrate::outcome_class(t)) << '\n';
  }
  return out.str();
}

std::string correction_table(Format f) {
  static const char* kPauliNames[4] = {"I", "Z", "X", "ZX"};
  std::ostringstream out;
  if (f == Format::json) {
    out << "[\n";
    for (int i = 0; i < 4; ++i) {
      const Pauli p = redistribute::distribution_correction(bell_from_index(i));
      out << "  {\"outcome\": " << i << ", \"correction\": " << index_of(p)
          << ", \"gate\": " << json_string(kPauliNames[index_of(p)])
          << ", \"applied_to\": [\"A'\", \"B'\", \"C'\"]}" << (i < 3 ? "," : "") << "\n";
    }
    out << "]\n";
    return out.str();
  }
  out << "outcome,correction,gate,applied_to\n";
  for (int i = 0; i < 4; ++i) {
    const Pauli p = redistribute::distribution_correction(bell_from_index(i));
    out << i << ',' << index_of(p) << ',' << kPauliNames[index_of(p)] << ",A'|B'|C'\n";
  }
  return out.str();
}

std::string fidelity_summary(Format f) {
  // Clone fidelities of both receiver marginals for a few reference inputs;
  // the protocol value is 5/6 for every input.
  static const double kPairs[5][2] = {
      {1.0, 0.0}, {0.0, 1.0}, {0.6, 0.8}, {0.70710678118654752, 0.70710678118654752},
      {0.28, -0.96}};
  std::ostringstream out;
  std::vector<std::array<double, 4>> rows;
  for (const auto& p : kPairs) {
    const auto amps = states::InputAmplitudes::real(p[0], p[1]);
    const DensityOperator rho = promote(states::telecloned_input(amps));
    rows.push_back({p[0], p[1], fidelity(partial_trace(rho, {"B"}), amps.chi("B")),
                    fidelity(partial_trace(rho, {"C"}), amps.chi("C"))});
  }
  if (f == Format::json) {
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out << "  {\"alpha\": " << fmt17(rows[i][0]) << ", \"beta\": " << fmt17(rows[i][1])
          << ", \"fidelity_b\": " << fmt17(rows[i][2]) << ", \"fidelity_c\": " << fmt17(rows[i][3])
          << ", \"expected\": " << fmt17(5.0 / 6.0) << "}" << (i + 1 < rows.size() ? "," : "")
          << "\n";
    }
    out << "]\n";
    return out.str();
  }
  out << "alpha,beta,fidelity_b,fidelity_c,expected\n";
  for (const auto& r : rows) {
    out << fmt17(r[0]) << ',' << fmt17(r[1]) << ',' << fmt17(r[2]) << ',' << fmt17(r[3]) << ','
        << fmt17(5.0 / 6.0) << '\n';
  }
  return out.str();
}

}  // namespace rqc::report_io
