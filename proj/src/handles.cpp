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

#include "hpruns/handles.hpp"

#include <algorithm>
#include <stdexcept>

namespace hpruns {

namespace {

// Gaps between consecutive occurrences of the rotation starting `offset`
// letters into the run; occurrences of a primitive root are exactly p apart.
void add_occurrence_gaps(const Run& run, std::size_t offset, std::vector<std::size_t>& out) {
    const std::size_t p = run.period;
    for (std::size_t q = run.start + offset; q + 2 * p - 1 <= run.end; q += p) {
        out.push_back(q + p - 1);
    }
}

std::string describe(const Run& r) {
    return "(" + std::to_string(r.start) + "," + std::to_string(r.end) + "," + std::to_string(r.period) + ")";
}

bool occurs_in(const Word& haystack, const Word& needle) {
    return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) != haystack.end();
}

}  // namespace

HandleSet handle_set(const Word& w, const Run& run) {
    if (!run.highly_periodic() || run_violation(w, run)) {
        throw std::invalid_argument("handle mapping defined only for hp-runs");
    }
    const Word prefix = w.factor(run.start - 1, run.period);
    HandleSet out{run, {}, min_rotation(prefix), max_rotation(prefix)};

    if (out.single_rotation_class()) {
        for (std::size_t i = run.start; i < run.end; ++i) {
            out.handles.push_back(i);
        }
        return out;
    }
    add_occurrence_gaps(run, min_rotation_index(prefix), out.handles);
    add_occurrence_gaps(run, max_rotation_index(prefix), out.handles);
    std::sort(out.handles.begin(), out.handles.end());
    out.handles.erase(std::unique(out.handles.begin(), out.handles.end()), out.handles.end());
    return out;
}

DisjointnessReport check_disjointness(std::size_t word_length, const std::vector<HandleSet>& sets) {
    DisjointnessReport report;
    report.word_length = word_length;
    report.hp_run_count = sets.size();

    constexpr std::size_t unowned = static_cast<std::size_t>(-1);
    std::vector<std::size_t> owner(word_length, unowned);
    for (std::size_t k = 0; k < sets.size(); ++k) {
        const auto count = sets[k].handles.size();
        report.min_handle_count = report.min_handle_count ? std::min(*report.min_handle_count, count) : count;
        for (std::size_t h : sets[k].handles) {
            if (h == 0 || h >= word_length) {
                throw std::invalid_argument("handle " + std::to_string(h) + " is not an inter-position");
            }
            if (owner[h] != unowned) {
                if (report.all_disjoint) {
                    report.all_disjoint = false;
                    report.colliding_pair = std::make_pair(sets[owner[h]].run, sets[k].run);
                }
                continue;
            }
            owner[h] = k;
        }
    }
    return report;
}

DisjointnessReport verify_disjointness(const Word& w) {
    const RunSet hp = hp_runs(w);
    std::vector<HandleSet> sets;
    sets.reserve(hp.size());
    for (const Run& r : hp.runs) {
        sets.push_back(handle_set(w, r));
    }
    return check_disjointness(w.size(), sets);
}

bool within_upper_bound(std::size_t hp_run_count, std::size_t word_length) {
    return 2 * hp_run_count + 1 <= word_length;
}

bool check_upper_bound(const Word& w) { return within_upper_bound(hp_runs(w).size(), w.size()); }

HandleAudit audit_handles(const Word& w) {
    HandleAudit audit;
    const RunSet hp = hp_runs(w);
    std::vector<HandleSet> sets;
    sets.reserve(hp.size());
    for (const Run& r : hp.runs) {
        sets.push_back(handle_set(w, r));
    }
    audit.disjointness = check_disjointness(w.size(), sets);

    auto fail = [&](const Run& r, const std::string& what) {
        if (!audit.violation) {
            audit.violation = what + " for run " + describe(r);
        }
    };
    for (const HandleSet& hs : sets) {
        const Run& r = hs.run;
        if (!is_prime(hs.w_min)) fail(r, "w_min not prime");
        if (!is_prime(hs.w_max)) fail(r, "w_max not prime");
        if (hs.single_rotation_class() && hs.w_min.size() != 1) fail(r, "w_min == w_max with |w_min| > 1");
        const Word span = w.factor(r.start - 1, r.length());
        if (!occurs_in(span, hs.w_min.power(2))) fail(r, "w_min^2 not a factor of the run");
        if (!occurs_in(span, hs.w_max.power(2))) fail(r, "w_max^2 not a factor of the run");
        if (hs.handles.size() < 2) fail(r, "fewer than two handles");
        for (std::size_t h : hs.handles) {
            if (h < r.start || h >= r.end) fail(r, "handle outside the run");
        }
    }
    if (!audit.disjointness.all_disjoint && !audit.violation) {
        const auto& [a, b] = *audit.disjointness.colliding_pair;
        audit.violation = "handle sets of " + describe(a) + " and " + describe(b) + " intersect";
    }
    return audit;
}

}  // namespace hpruns
