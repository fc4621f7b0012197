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

// End-to-end tests against the built rqc binary (path injected by CMake).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef RQC_CLI_PATH
#error "RQC_CLI_PATH must be defined"
#endif

namespace {

namespace fs = std::filesystem;

int run_cli(const std::string& args) {
  const std::string cmd = std::string(RQC_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("rqc_cli_test_" + std::to_string(static_cast<unsigned>(::getpid())));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += (c == '\n');
  return n;
}

}  // namespace

TEST_CASE("run writes a passing report and transcript") {
  TempDir dir;
  const fs::path report = dir.path / "report.json";
  CHECK(run_cli("run --alpha 1 --beta 0 --unitary identity --seed 7 --output " +
                report.string()) == 0);
  const std::string text = slurp(report);
  CHECK(text.find("\"pass\": true") != std::string::npos);
  CHECK(text.find("0.83333333333333") != std::string::npos);
  CHECK(fs::exists(report.string() + ".transcript"));

  // Deterministic byte-for-byte for a fixed config and seed.
  const fs::path again = dir.path / "again.json";
  CHECK(run_cli("run --alpha 1 --beta 0 --unitary identity --seed 7 --output " +
                again.string()) == 0);
  CHECK(slurp(again) == text);
}

TEST_CASE("run accepts named gates, phase angles and explicit matrices") {
  TempDir dir;
  const fs::path report = dir.path / "r.json";
  CHECK(run_cli("run --alpha 0.6 --beta 0.8 --unitary hadamard --seed 1 --output " +
                report.string()) == 0);
  CHECK(run_cli("run --alpha 0.6 --beta 0.8 --unitary 'phase(1.5707963)' --seed 2 --output " +
                report.string()) == 0);
  const std::string h =
      "'[[[0.7071067811865476,0],[0.7071067811865476,0]],"
      "[[0.7071067811865476,0],[-0.7071067811865476,0]]]'";
  CHECK(run_cli("run --alpha 0.6 --beta 0.8 --matrix " + h + " --seed 3 --output " +
                report.string()) == 0);
  CHECK(run_cli("run --alpha 0.6 --beta 0.8 --format csv --seed 4 --output " +
                (dir.path / "r.csv").string()) == 0);
  const std::string csv = slurp(dir.path / "r.csv");
  CHECK(count_lines(csv) == 2);
  CHECK(csv.rfind("seed,", 0) == 0);
}

TEST_CASE("run rejects bad configs with exit 2") {
  TempDir dir;
  CHECK(run_cli("run --alpha 1 --beta 1 --output " + (dir.path / "x.json").string()) == 2);
  CHECK(run_cli("run --unitary warp --output " + (dir.path / "x.json").string()) == 2);
  CHECK(run_cli("run --matrix '[[1,0],[0,1]]' --output " + (dir.path / "x.json").string()) == 2);
  CHECK(run_cli("run --matrix '[[[1,0],[0,0]],[[0,0],[2,0]]]' --output " +
                (dir.path / "x.json").string()) == 2);  // not unitary
  CHECK(run_cli("run --format yaml --output " + (dir.path / "x.json").string()) == 2);
  CHECK(run_cli("bogus-subcommand") == 2);
}

TEST_CASE("verify passes at defaults and fails at an unattainable tolerance") {
  TempDir dir;
  const fs::path out = dir.path / "verify.json";
  // Small trial counts keep this test quick; the acceptance binary runs the
  // full-strength configuration.
  CHECK(run_cli("verify --trials 3 --mc-runs 1600 --output " + out.string()) == 0);
  const std::string text = slurp(out);
  CHECK(text.find("\"pass\": false") == std::string::npos);
  CHECK(text.find("outcome_statistics") != std::string::npos);

  CHECK(run_cli("verify --trials 3 --mc-runs 1600 --tolerance 1e-30 --output " + out.string()) ==
        1);
  CHECK(slurp(out).find("\"pass\": false") != std::string::npos);

  CHECK(run_cli("verify --trials 0 --output " + out.string()) == 2);
}

TEST_CASE("tables emit the class, correction and fidelity files") {
  TempDir dir;
  CHECK(run_cli("tables --format csv --output-dir " + dir.path.string()) == 0);
  const std::string classes = slurp(dir.path / "class_table.csv");
  CHECK(count_lines(classes) == 65);  // header + 64 rows
  CHECK(classes.rfind("ae,bf,cg,class", 0) == 0);
  CHECK(classes.find("0,0,0,I") != std::string::npos);
  CHECK(classes.find("3,1,2,I") != std::string::npos);
  CHECK(classes.find("1,0,0,II") != std::string::npos);

  const std::string corrections = slurp(dir.path / "correction_table.csv");
  CHECK(count_lines(corrections) == 5);
  CHECK(corrections.find("1,1,Z") != std::string::npos);

  const std::string fidelities = slurp(dir.path / "fidelity_summary.csv");
  CHECK(fidelities.find("0.83333333333333") != std::string::npos);

  CHECK(run_cli("tables --format json --output-dir " + dir.path.string()) == 0);
  CHECK(slurp(dir.path / "class_table.json").find("\"class\": \"I\"") != std::string::npos);
}

TEST_CASE("RQC_OUTPUT_DIR provides the default output directory") {
  TempDir dir;
  setenv("RQC_OUTPUT_DIR", dir.path.c_str(), 1);
  CHECK(run_cli("run --alpha 0.6 --beta 0.8 --seed 11") == 0);
  unsetenv("RQC_OUTPUT_DIR");
  CHECK(fs::exists(dir.path / "report.json"));
}
