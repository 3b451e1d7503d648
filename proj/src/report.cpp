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

#include "hpruns/report.hpp"

#include <cstdio>
#include <sstream>

#include "hpruns/text_format.hpp"

namespace hpruns {

using nlohmann::ordered_json;

std::string scan_tsv(const RunSet& runs) {
    std::ostringstream out;
    out << "start\tend\tperiod\texponent\n";
    char exponent[32];
    for (const Run& r : runs.runs) {
        std::snprintf(exponent, sizeof exponent, "%.4f", r.exponent());
        out << r.start << '\t' << r.end << '\t' << r.period << '\t' << exponent << '\n';
    }
    const RunSet hp = hp_runs(runs);
    const Density d{hp.size(), runs.word_length};
    char density[32];
    std::snprintf(density, sizeof density, "%.4f", d.value());
    out << "# word_length=" << runs.word_length << '\n'
        << "# run_count=" << runs.size() << '\n'
        << "# hp_run_count=" << hp.size() << '\n'
        << "# hp_density=" << d.str() << " (" << density << ")\n";
    return out.str();
}

ordered_json to_json(const Run& run) {
    return ordered_json{{"start", run.start}, {"end", run.end}, {"period", run.period}, {"length", run.length()}};
}

ordered_json scan_json(const RunSet& runs) {
    const RunSet hp = hp_runs(runs);
    ordered_json list = ordered_json::array();
    for (const Run& r : runs.runs) {
        list.push_back(to_json(r));
    }
    return ordered_json{{"word_length", runs.word_length},
                        {"run_count", runs.size()},
                        {"hp_run_count", hp.size()},
                        {"hp_density_num", hp.size()},
                        {"hp_density_den", runs.word_length},
                        {"runs", std::move(list)}};
}

ordered_json to_json(const DisjointnessReport& report) {
    ordered_json out{{"word_length", report.word_length},
                     {"hp_run_count", report.hp_run_count},
                     {"all_disjoint", report.all_disjoint}};
    out["min_handle_count"] = report.min_handle_count ? ordered_json(*report.min_handle_count) : ordered_json(nullptr);
    if (report.colliding_pair) {
        auto brief = [](const Run& r) {
            return ordered_json{{"start", r.start}, {"end", r.end}, {"period", r.period}};
        };
        out["colliding_pair"] = ordered_json::array({brief(report.colliding_pair->first), brief(report.colliding_pair->second)});
    } else {
        out["colliding_pair"] = nullptr;
    }
    return out;
}

ordered_json to_json(const VerifyReport& report) {
    ordered_json cases = ordered_json::array();
    for (const VerifyCase& c : report.cases) {
        ordered_json item{{"id", c.id}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}};
        if (!c.note.empty()) {
            item["note"] = c.note;
        }
        cases.push_back(std::move(item));
    }
    return ordered_json{{"campaign", report.campaign},
                        {"cases", std::move(cases)},
                        {"all_pass", report.all_pass},
                        {"elapsed", report.elapsed_seconds}};
}

ordered_json to_json(const DensityFrontier& frontier) {
    ordered_json witnesses = ordered_json::array();
    for (const Word& w : frontier.witnesses) {
        witnesses.push_back(render_word(w));
    }
    return ordered_json{{"length", frontier.length},
                        {"sigma", frontier.sigma},
                        {"max_hp_runs", frontier.max_hp_runs},
                        {"witnesses", std::move(witnesses)},
                        {"complete", frontier.complete},
                        {"words_visited", frontier.words_visited}};
}

std::string to_text(const VerifyReport& report) {
    std::ostringstream out;
    for (const VerifyCase& c : report.cases) {
        out << (c.pass ? "PASS" : "FAIL") << "  " << c.id;
        if (!c.expected.empty()) out << "  expected: " << c.expected;
        out << "  computed: " << c.computed;
        if (!c.note.empty()) out << "  [" << c.note << "]";
        out << '\n';
    }
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.3f", report.elapsed_seconds);
    out << report.campaign << ": " << (report.all_pass ? "all pass" : "FAILED") << " (" << report.cases.size()
        << " cases, " << elapsed << " s)\n";
    return out.str();
}

std::string to_text(const DensityFrontier& frontier) {
    std::ostringstream out;
    out << "length=" << frontier.length << " sigma=" << frontier.sigma << " max_hp_runs=" << frontier.max_hp_runs
        << " ceiling=" << (frontier.length - 1) / 2 << " words=" << frontier.words_visited
        << (frontier.complete ? "" : " PARTIAL (budget exceeded)") << '\n';
    for (const Word& w : frontier.witnesses) {
        out << render_word(w) << '\n';
    }
    return out.str();
}

}  // namespace hpruns
