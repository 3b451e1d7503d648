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

#ifndef HPRUNS_HANDLES_HPP
#define HPRUNS_HANDLES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hpruns/runs.hpp"
#include "hpruns/word.hpp"

namespace hpruns {

// Inter-position i (1 <= i <= n-1) is the gap between 1-based letters i and i+1.

/// Handles of one hp-run, in increasing order of inter-position.
///
/// Let w be the run's length-p prefix and w_min / w_max its extreme rotations.
/// When they differ, the handles are the gaps between back-to-back occurrences
/// of w_min (and of w_max) lying fully inside the run. When they coincide
/// (only possible for p = 1) every gap inside the run is a handle.
struct HandleSet {
    Run run;
    std::vector<std::size_t> handles;
    Word w_min;
    Word w_max;

    bool single_rotation_class() const { return w_min == w_max; }
};

/// Throws std::invalid_argument("handle mapping defined only for hp-runs")
/// unless `run` is a highly periodic run of `w`.
HandleSet handle_set(const Word& w, const Run& run);

struct DisjointnessReport {
    std::size_t word_length = 0;
    std::size_t hp_run_count = 0;
    bool all_disjoint = true;
    std::optional<std::size_t> min_handle_count;  // absent when there are no hp-runs
    std::optional<std::pair<Run, Run>> colliding_pair;
};

/// Pairwise disjointness of precomputed handle sets of one word; the witness
/// is the first collision met scanning the sets in order.
DisjointnessReport check_disjointness(std::size_t word_length, const std::vector<HandleSet>& sets);

/// Builds every handle set and checks pairwise disjointness. The witness is the
/// first collision met scanning hp-runs in (start, period) order.
DisjointnessReport verify_disjointness(const Word& w);

/// |hp_runs(w)| <= (|w| - 1) / 2, compared exactly.
bool check_upper_bound(const Word& w);
bool within_upper_bound(std::size_t hp_run_count, std::size_t word_length);

/// Per-word audit of the structural facts the handle mapping relies on.
struct HandleAudit {
    DisjointnessReport disjointness;
    std::optional<std::string> violation;  // first failed fact, with the offending run
};

/// Checks, for every hp-run: w_min and w_max are prime; w_min == w_max only
/// when |w_min| = 1; w_min^2 and w_max^2 occur inside the run; at least two
/// handles; handle sets pairwise disjoint.
HandleAudit audit_handles(const Word& w);

}  // namespace hpruns

#endif  // HPRUNS_HANDLES_HPP
