// Copyright 2026 The hpruns Authors. All Rights Reserved.
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

#ifndef HPRUNS_REPORT_HPP
#define HPRUNS_REPORT_HPP

#include <string>

#include "json.hpp"

#include "hpruns/campaigns.hpp"
#include "hpruns/handles.hpp"
#include "hpruns/runs.hpp"

namespace hpruns {

// Scan report, TSV: header "start\tend\tperiod\texponent", one row per run
// (exponent with 4 decimals), then "#"-prefixed summary lines.
std::string scan_tsv(const RunSet& runs);

// Scan report, JSON: {word_length, run_count, hp_run_count, hp_density_num,
// hp_density_den, runs: [{start, end, period, length}]}.
nlohmann::ordered_json scan_json(const RunSet& runs);

nlohmann::ordered_json to_json(const Run& run);
nlohmann::ordered_json to_json(const DisjointnessReport& report);
nlohmann::ordered_json to_json(const VerifyReport& report);
nlohmann::ordered_json to_json(const DensityFrontier& frontier);

/// One line per case: "PASS|FAIL  id  expected=...  computed=...", then a summary.
std::string to_text(const VerifyReport& report);
std::string to_text(const DensityFrontier& frontier);

}  // namespace hpruns

#endif  // HPRUNS_REPORT_HPP
