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

// rqc: remote-control protocol front end.
//
//   rqc run     one protocol instance -> report file, exit 0 iff it passed
//   rqc verify  the full verification suite -> suite report, exit 0 iff green
//   rqc tables  outcome-class / correction / fidelity tables
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or config error.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>

#include <CLI11.hpp>
#include <json.hpp>

#include "rqc/error.hpp"
#include "rqc/locc.hpp"
#include "rqc/report_io.hpp"
#include "rqc/verify.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

fs::path output_path(const std::string& flag_value, const std::string& default_name) {
  if (!flag_value.empty()) return fs::path(flag_value);
  const char* dir = std::getenv("RQC_OUTPUT_DIR");
  return dir != nullptr ? fs::path(dir) / default_name : fs::path(default_name);
}

void write_file(const fs::path& path, const std::string& contents) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw rqc::Error("cannot write output file '" + path.string() + "'");
  out << contents;
  if (!out.good()) throw rqc::Error("failed writing '" + path.string() + "'");
}

// Named gate, "phase(<radians>)", or a JSON 2x2 matrix of [re, im] pairs.
rqc::redistribute::ControlUnitary parse_unitary(const std::string& name,
                                                const std::string& matrix_json) {
  using rqc::redistribute::ControlUnitary;
  if (!matrix_json.empty()) {
    const nlohmann::json j = nlohmann::json::parse(matrix_json);
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2) {
      throw rqc::Error("matrix must be a 2x2 JSON array of [re, im] pairs");
    }
    std::array<rqc::cx, 4> m{};
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        const auto& cell = j[r][c];
        if (!cell.is_array() || cell.size() != 2) {
          throw rqc::Error("matrix entries must be [re, im] pairs");
        }
        m[r * 2 + c] = rqc::cx{cell[0].get<double>(), cell[1].get<double>()};
      }
    }
    return ControlUnitary(m);
  }
  if (name == "identity") return ControlUnitary::identity();
  if (name == "x") return ControlUnitary::pauli_x();
  if (name == "z") return ControlUnitary::pauli_z();
  if (name == "hadamard") return ControlUnitary::hadamard();
  if (name.rfind("phase(", 0) == 0 && name.back() == ')') {
    const std::string arg = name.substr(6, name.size() - 7);
    char* end = nullptr;
    const double theta = std::strtod(arg.c_str(), &end);
    if (end == arg.c_str() || *end != '\0') throw rqc::Error("bad phase angle '" + arg + "'");
    return ControlUnitary::phase(theta);
  }
  throw rqc::Error("unknown unitary '" + name +
                   "' (identity | x | z | hadamard | phase(theta), or --matrix)");
}

struct RunFlags {
  double alpha = 1.0;
  double beta = 0.0;
  std::string unitary = "identity";
  std::string matrix;
  std::uint64_t seed = 0;
  double tolerance = 1e-10;
  std::string output;
  std::string format = "json";
};

int cmd_run(const RunFlags& flags) {
  const rqc::report_io::Format format = rqc::report_io::format_from_name(flags.format);

  const double norm = flags.alpha * flags.alpha + flags.beta * flags.beta;
  if (std::abs(norm - 1.0) > std::max(flags.tolerance, 1e-12)) {
    throw rqc::Error("alpha^2 + beta^2 = " + std::to_string(norm) + ", expected 1");
  }
  // Renormalize exactly so the core's strict 1e-12 contract holds.
  const double scale = 1.0 / std::sqrt(norm);
  const auto amps = rqc::states::InputAmplitudes::real(flags.alpha * scale, flags.beta * scale);
  const auto u = parse_unitary(flags.unitary, flags.matrix);

  const auto [report, transcript] =
      rqc::locc::run_protocol(amps, u, flags.seed, flags.tolerance);

  const fs::path path =
      output_path(flags.output, flags.format == "csv" ? "report.csv" : "report.json");
  write_file(path, rqc::report_io::protocol_report(report, format));
  write_file(path.string() + ".transcript", rqc::locc::to_text(transcript));

  std::cout << "outcomes: triple (" << rqc::index_of(report.triple.ae) << ","
            << rqc::index_of(report.triple.bf) << "," << rqc::index_of(report.triple.cg)
            << "), distribution " << rqc::index_of(report.distribution_outcome) << "\n";
  std::cout << "fidelity_d " << report.fidelity_d << ", clones " << report.fidelity_b_prime
            << " / " << report.fidelity_c_prime << ", theorem distance "
            << report.trace_distance_theorem << "\n";
  std::cout << "report written to " << path.string() << "\n";
  std::cout << (report.pass ? "PASS" : "FAIL") << "\n";
  return report.pass ? kExitPass : kExitFail;
}

struct VerifyFlags {
  double tolerance = 1e-10;
  int trials = 100;
  std::uint64_t seed = 20260801;
  int mc_runs = 6400;
  std::string output;
  std::string format = "json";
};

int cmd_verify(const VerifyFlags& flags) {
  const rqc::report_io::Format format = rqc::report_io::format_from_name(flags.format);
  rqc::verify::VerifyOptions options;
  options.tolerance = flags.tolerance;
  options.trials = flags.trials;
  options.seed = flags.seed;
  options.monte_carlo_runs = flags.mc_runs;

  const auto checks = rqc::verify::run_verification(options);
  bool all = true;
  for (const auto& c : checks) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.detail << ")\n";
    all = all && c.pass;
  }
  const fs::path path =
      output_path(flags.output, flags.format == "csv" ? "verify.csv" : "verify.json");
  write_file(path, rqc::report_io::check_results(checks, options, format));
  std::cout << "suite report written to " << path.string() << "\n";
  if (!all) {
    std::cout << "failing checks:";
    for (const auto& c : checks) {
      if (!c.pass) std::cout << ' ' << c.name;
    }
    std::cout << "\n";
  }
  return all ? kExitPass : kExitFail;
}

struct TablesFlags {
  std::string output_dir;
  std::string format = "json";
};

int cmd_tables(const TablesFlags& flags) {
  const rqc::report_io::Format format = rqc::report_io::format_from_name(flags.format);
  const std::string ext = flags.format == "csv" ? ".csv" : ".json";
  const fs::path dir = [&flags]() {
    if (!flags.output_dir.empty()) return fs::path(flags.output_dir);
    const char* env = std::getenv("RQC_OUTPUT_DIR");
    return env != nullptr ? fs::path(env) : fs::path(".");
  }();
  write_file(dir / ("class_table" + ext), rqc::report_io::class_table(format));
  write_file(dir / ("correction_table" + ext), rqc::report_io::correction_table(format));
  write_file(dir / ("fidelity_summary" + ext), rqc::report_io::fidelity_summary(format));
  std::cout << "tables written to " << dir.string() << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-object remote quantum control simulator"};
  app.require_subcommand(1);

  RunFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "run one protocol instance");
  run->add_option("--alpha", run_flags.alpha, "input amplitude of |0>");
  run->add_option("--beta", run_flags.beta, "input amplitude of |1>");
  run->add_option("--unitary", run_flags.unitary,
                  "control gate: identity | x | z | hadamard | phase(theta)");
  run->add_option("--matrix", run_flags.matrix, "explicit 2x2 unitary as JSON [re, im] pairs");
  run->add_option("--seed", run_flags.seed, "measurement sampling seed");
  run->add_option("--tolerance", run_flags.tolerance, "pass/fail tolerance");
  run->add_option("--output", run_flags.output, "report path (default report.json)");
  run->add_option("--format", run_flags.format, "json | csv");

  VerifyFlags verify_flags;
  CLI::App* verify = app.add_subcommand("verify", "run the full verification suite");
  verify->add_option("--tolerance", verify_flags.tolerance, "fidelity/distance tolerance");
  verify->add_option("--trials", verify_flags.trials, "random draws for the theorem check");
  verify->add_option("--seed", verify_flags.seed, "suite seed");
  verify->add_option("--mc-runs", verify_flags.mc_runs, "runs for the statistics check");
  verify->add_option("--output", verify_flags.output, "suite report path");
  verify->add_option("--format", verify_flags.format, "json | csv");

  TablesFlags tables_flags;
  CLI::App* tables = app.add_subcommand("tables", "emit the protocol tables");
  tables->add_option("--output-dir", tables_flags.output_dir, "directory for table files");
  tables->add_option("--format", tables_flags.format, "json | csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(run_flags);
    if (verify->parsed()) return cmd_verify(verify_flags);
    if (tables->parsed()) return cmd_tables(tables_flags);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad matrix JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const rqc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
