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

#include <string>
#include <vector>

#include "rqc/locc.hpp"
#include "rqc/verify.hpp"

namespace rqc::report_io {

enum class Format { json, csv };

Format format_from_name(const std::string& name);  // "json" | "csv"

// All writers emit fixed key order and 17-significant-digit numbers, so a
// given report serializes to identical bytes on every run.
std::string protocol_report(const locc::ProtocolReport& r, Format f);
std::string check_results(const std::vector<verify::CheckResult>& checks,
                          const verify::VerifyOptions& options, Format f);

// The three protocol tables: outcome-triple classes (64 rows), broadcast
// outcome -> receiver correction (4 rows), and the clone-fidelity summary.
std::string class_table(Format f);
std::string correction_table(Format f);
std::string fidelity_summary(Format f);

}  // namespace rqc::report_io
