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

#include "hpruns/campaigns.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "hpruns/families.hpp"
#include "hpruns/handles.hpp"
#include "hpruns/runs.hpp"
#include "hpruns/text_format.hpp"

namespace hpruns {

namespace {

class Stopwatch {
public:
    double seconds() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

private:
    Clock::time_point start_ = Clock::now();
};

std::string pair_str(std::uint64_t ell, std::uint64_t r) {
    return "length=" + std::to_string(ell) + " hp_runs=" + std::to_string(r);
}

std::string run_str(const Run& r) {
    return "(" + std::to_string(r.start) + "," + std::to_string(r.end) + "," + std::to_string(r.period) + ")";
}

bool is_prefix(const Word& prefix, const Word& w) {
    return prefix.size() <= w.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}

// An hp-run of `w` with the given period covering the 1-based span [first, last].
std::optional<Run> hp_run_covering(const Word& w, std::size_t period, std::size_t first, std::size_t last) {
    for (const Run& r : hp_runs(w).runs) {
        if (r.period == period && r.start <= first && last <= r.end) {
            return r;
        }
    }
    return std::nullopt;
}

struct MeasuredRow {
    std::uint64_t ell;
    std::uint64_t r;
};

MeasuredRow measure_fib(std::size_t n) {
    const Word f = fib_word(n);
    return {f.size(), hp_runs(f).size()};
}

}  // namespace

VerifyReport verify_table1() {
    Stopwatch clock;
    VerifyReport report{"table1", {}, true, 0.0};
    for (const TableRow& row : fibonacci_table) {
        const auto m = measure_fib(row.n);
        report.add({"n=" + std::to_string(row.n), pair_str(row.ell, row.r), pair_str(m.ell, m.r),
                    m.ell == row.ell && m.r == row.r, ""});
    }
    report.elapsed_seconds = clock.seconds();
    return report;
}

VerifyReport verify_recurrences(std::size_t max_n) {
    if (max_n < 5) {
        throw std::invalid_argument("recurrences need --max-n >= 5");
    }
    // fail early with the limit error before doing any work
    (void)fib_symbolic(max_n);

    Stopwatch clock;
    VerifyReport report{"recurrences", {}, true, 0.0};
    const auto predicted = predicted_counts(max_n);
    std::vector<MeasuredRow> measured;
    for (std::size_t n = 0; n <= max_n; ++n) {
        measured.push_back(measure_fib(n));
    }

    for (std::size_t n = 5; n <= max_n; ++n) {
        const auto& m = measured[n];
        const std::uint64_t ell_sum = measured[n - 1].ell + measured[n - 2].ell;
        report.add({"n=" + std::to_string(n) + " length", "length=" + std::to_string(ell_sum),
                    "length=" + std::to_string(m.ell), m.ell == ell_sum, ""});

        const std::uint64_t step_bound = measured[n - 1].r + measured[n - 2].r + concatenation_gain(n);
        const std::uint64_t prediction = predicted[n].r;
        const bool ok = m.r >= step_bound && m.r >= prediction;
        std::string note = m.r == prediction ? "equality" : (m.r > prediction ? "excess " + std::to_string(m.r - prediction) : "");
        report.add({"n=" + std::to_string(n) + " hp_runs",
                    "hp_runs>=" + std::to_string(std::max(step_bound, prediction)) + " (predicted " +
                        std::to_string(prediction) + ")",
                    "hp_runs=" + std::to_string(m.r), ok, std::move(note)});
    }

    if (max_n >= 19) {
        const auto& m = measured[19];
        constexpr std::uint64_t ell19 = 255'329;
        constexpr std::uint64_t r19 = 103'664;
        char density[32];
        std::snprintf(density, sizeof density, "%.6f", static_cast<double>(m.r) / static_cast<double>(m.ell));
        // density > 0.406 compared exactly as 1000 r > 406 ell
        report.add({"n=19 endpoint", "length=255329 hp_runs>=103664 density>0.406",
                    pair_str(m.ell, m.r) + " density=" + density,
                    m.ell == ell19 && m.r >= r19 && 1000 * m.r > 406 * m.ell, ""});
    }
    report.elapsed_seconds = clock.seconds();
    return report;
}

VerifyReport verify_lemma5(const Word& base, std::size_t steps) {
    if (steps < 1) {
        throw std::invalid_argument("lemma5 needs --steps >= 1");
    }
    (void)lemma5_word(base, steps);  // limit check up front

    Stopwatch clock;
    VerifyReport report{"lemma5", {}, true, 0.0};
    Word s = base;
    std::uint64_t count = hp_runs(s).size();
    Density density{count, s.size()};
    report.add({"k=0", "", pair_str(s.size(), count) + " density=" + density.str(), true, ""});
    for (std::size_t k = 1; k <= steps; ++k) {
        const std::uint64_t prev_len = s.size();
        const std::uint64_t prev_count = count;
        s = lemma5_step(s);
        count = hp_runs(s).size();
        const Density next{count, s.size()};
        const std::uint64_t expected = 6 * prev_count + 1;
        std::string note = count == expected ? "equality" : (count > expected ? "excess " + std::to_string(count - expected) : "");
        report.add({"k=" + std::to_string(k),
                    "length=" + std::to_string(6 * prev_len) + " hp_runs>=" + std::to_string(expected) +
                        " density>" + density.str(),
                    pair_str(s.size(), count) + " density=" + next.str(),
                    s.size() == 6 * prev_len && count >= expected && next > density, std::move(note)});
        density = next;
    }
    report.elapsed_seconds = clock.seconds();
    return report;
}

namespace {

struct AuditPartial {
    std::uint64_t words = 0;
    std::uint64_t hp_runs = 0;
    std::size_t min_handles = static_cast<std::size_t>(-1);
    std::optional<std::string> violation;  // first in enumeration order
};

}  // namespace

VerifyReport verify_handles(std::size_t max_len, std::size_t sigma, Execution execution) {
    if (max_len < 1 || sigma < 1) {
        throw std::invalid_argument("handles needs --max-len >= 1 and --sigma >= 1");
    }
    Stopwatch clock;
    VerifyReport report{"handles", {}, true, 0.0};
    for (std::size_t len = 1; len <= max_len; ++len) {
        auto visit = [](AuditPartial& acc, const Word& w) {
            const HandleAudit audit = audit_handles(w);
            ++acc.words;
            acc.hp_runs += audit.disjointness.hp_run_count;
            if (audit.disjointness.min_handle_count) {
                acc.min_handles = std::min(acc.min_handles, *audit.disjointness.min_handle_count);
            }
            if (audit.violation && !acc.violation) {
                acc.violation = render_word(w) + ": " + *audit.violation;
            }
        };
        auto merge = [](AuditPartial& into, AuditPartial&& from) {
            into.words += from.words;
            into.hp_runs += from.hp_runs;
            into.min_handles = std::min(into.min_handles, from.min_handles);
            if (!into.violation) into.violation = std::move(from.violation);
        };
        const auto result = sweep_canonical(len, sigma, execution, AuditPartial{}, visit, merge);
        const auto& acc = result.value;
        std::string computed = "words=" + std::to_string(acc.words) + " hp_runs=" + std::to_string(acc.hp_runs);
        if (acc.hp_runs > 0) computed += " min_handles=" + std::to_string(acc.min_handles);
        if (acc.violation) computed += " violation: " + *acc.violation;
        report.add({"len=" + std::to_string(len), "no violations", computed, !acc.violation, ""});
    }
    report.elapsed_seconds = clock.seconds();
    return report;
}

DensityFrontier exhaustive_frontier(std::size_t length, std::size_t sigma, Execution execution,
                                    std::optional<std::chrono::duration<double>> budget) {
    std::optional<Clock::time_point> deadline;
    if (budget) {
        deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(*budget);
    }
    struct Partial {
        std::size_t best = 0;
        std::vector<Word> witnesses;
    };
    auto visit = [](Partial& acc, const Word& w) {
        const std::size_t count = hp_runs(w).size();
        if (count > acc.best || acc.witnesses.empty()) {
            acc.best = count;
            acc.witnesses.clear();
        }
        if (count == acc.best && acc.witnesses.size() < DensityFrontier::max_witnesses) {
            acc.witnesses.push_back(w);
        }
    };
    auto merge = [](Partial& into, Partial&& from) {
        if (from.witnesses.empty()) return;
        if (into.witnesses.empty() || from.best > into.best) {
            into = std::move(from);
            return;
        }
        if (from.best == into.best) {
            for (auto& w : from.witnesses) {
                if (into.witnesses.size() >= DensityFrontier::max_witnesses) break;
                into.witnesses.push_back(std::move(w));
            }
        }
    };
    auto result = sweep_canonical(length, sigma, execution, Partial{}, visit, merge, deadline);
    return DensityFrontier{length, sigma, result.value.best, std::move(result.value.witnesses), result.complete,
                           result.words_visited};
}

VerifyReport verify_upper_bound(std::size_t max_len, std::size_t sigma, Execution execution) {
    if (max_len < 1 || sigma < 1) {
        throw std::invalid_argument("upper-bound needs --max-len >= 1 and --sigma >= 1");
    }
    Stopwatch clock;
    VerifyReport report{"upper-bound", {}, true, 0.0};
    for (std::size_t len = 1; len <= max_len; ++len) {
        const DensityFrontier f = exhaustive_frontier(len, sigma, execution);
        const std::size_t ceiling = (len - 1) / 2;
        std::string computed = "max_hp_runs=" + std::to_string(f.max_hp_runs) + " words=" + std::to_string(f.words_visited);
        if (!f.witnesses.empty()) computed += " witness=" + render_word(f.witnesses.front());
        report.add({"len=" + std::to_string(len), "max_hp_runs<=" + std::to_string(ceiling), computed,
                    f.complete && within_upper_bound(f.max_hp_runs, len), ""});
    }
    report.elapsed_seconds = clock.seconds();
    return report;
}

VerifyReport verify_block_structure() {
    Stopwatch clock;
    VerifyReport report{"blocks", {}, true, 0.0};
    const Word x = block_x();
    const Word y = block_y();
    const Word a = alpha();
    const Word b = beta();

    report.add({"|alpha|,|beta|", "26,19", std::to_string(a.size()) + "," + std::to_string(b.size()),
                a.size() == 26 && b.size() == 19, ""});
    report.add({"beta prefix of alpha", "true", is_prefix(b, a) ? "true" : "false", is_prefix(b, a), ""});
    const Word ax = Word::from_letters("a").concat(x);
    report.add({"Y prefix of aX", "true", is_prefix(y, ax) ? "true" : "false", is_prefix(y, ax), ""});
    const bool ba = is_prefix(a, b.concat(a));
    report.add({"alpha prefix of beta alpha", "true", ba ? "true" : "false", ba, ""});

    // period-7 hp-run straddling the X|Y boundary of XYX, and hence in alpha alpha and alpha beta
    const std::size_t boundary = x.size();
    auto straddling7 = [&](const Word& w) {
        for (const Run& r : hp_runs(w).runs) {
            if (r.period == 7 && r.start <= boundary && boundary < r.end) return std::optional<Run>(r);
        }
        return std::optional<Run>{};
    };
    for (const auto& [id, w] : {std::pair<std::string, Word>{"XYX", x.concat(y).concat(x)},
                                {"alpha alpha", a.concat(a)},
                                {"alpha beta", a.concat(b)}}) {
        const auto r = straddling7(w);
        report.add({id + " hp-run of period 7", "present", r ? run_str(*r) : "absent", r.has_value(), ""});
    }

    const Word abababaa = a.concat(b).power(2).concat(a).concat(a);
    const auto ab3 = hp_run_covering(abababaa, a.size() + b.size(), 1, 3 * (a.size() + b.size()));
    report.add({"(alpha beta)^3 in alpha beta alpha beta alpha alpha", "hp-run of period 45 covering [1,135]",
                ab3 ? run_str(*ab3) : "absent", ab3.has_value(), ""});

    const Word aaba = a.concat(a).concat(b).concat(a);
    const auto a3 = hp_run_covering(aaba, a.size(), 1, 3 * a.size());
    report.add({"alpha^3 in alpha alpha beta alpha", "hp-run of period 26 covering [1,78]",
                a3 ? run_str(*a3) : "absent", a3.has_value(), ""});

    report.elapsed_seconds = clock.seconds();
    return report;
}

VerifyReport verify_fibonacci_exponent(std::size_t max_n) {
    Stopwatch clock;
    VerifyReport report{"fibonacci-exponent", {}, true, 0.0};
    for (std::size_t n = 0; n <= max_n; ++n) {
        const Word f = fib_symbolic_word(n);
        Run worst{};
        bool ok = true;
        for (const Run& r : find_runs(f).runs) {
            // exponent < 3.618 as 1000 * length < 3618 * period
            if (1000 * r.length() >= 3618 * r.period) ok = false;
            if (worst.period == 0 || r.length() * worst.period > worst.length() * r.period) worst = r;
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "max_exponent=%.4f", worst.period ? worst.exponent() : 0.0);
        report.add({"n=" + std::to_string(n), "max_exponent<3.618", buf, ok, ""});
    }
    report.elapsed_seconds = clock.seconds();
    return report;
}

VerifyReport verify_oracle_equivalence(const OracleSweepOptions& options, Execution execution) {
    Stopwatch clock;
    VerifyReport report{"oracle", {}, true, 0.0};

    struct Partial {
        std::uint64_t words = 0;
        std::optional<std::string> mismatch;
    };
    auto visit = [](Partial& acc, const Word& w) {
        ++acc.words;
        if (!acc.mismatch && find_runs(w) != find_runs_oracle(w)) acc.mismatch = render_word(w);
    };
    auto merge = [](Partial& into, Partial&& from) {
        into.words += from.words;
        if (!into.mismatch) into.mismatch = std::move(from.mismatch);
    };
    std::uint64_t exhaustive_words = 0;
    std::optional<std::string> exhaustive_mismatch;
    for (std::size_t len = 1; len <= options.exhaustive_len; ++len) {
        auto result = sweep_canonical(len, options.exhaustive_sigma, execution, Partial{}, visit, merge);
        exhaustive_words += result.value.words;
        if (!exhaustive_mismatch) exhaustive_mismatch = std::move(result.value.mismatch);
    }
    report.add({"exhaustive sigma=" + std::to_string(options.exhaustive_sigma) +
                    " len<=" + std::to_string(options.exhaustive_len),
                "0 mismatches",
                "words=" + std::to_string(exhaustive_words) +
                    (exhaustive_mismatch ? " mismatch: " + *exhaustive_mismatch : " mismatches=0"),
                !exhaustive_mismatch, ""});

    // random words are drawn serially so the sample does not depend on thread count
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> length_dist(1, options.random_max_len);
    std::vector<Word> sample;
    sample.reserve(options.random_count);
    for (std::size_t k = 0; k < options.random_count; ++k) {
        const std::size_t sigma = options.random_sigmas[k % options.random_sigmas.size()];
        std::uniform_int_distribution<Symbol> symbol_dist(0, static_cast<Symbol>(sigma - 1));
        std::vector<Symbol> symbols(length_dist(rng));
        for (auto& s : symbols) s = symbol_dist(rng);
        sample.emplace_back(std::move(symbols), sigma);
    }
    std::vector<char> bad(sample.size(), 0);
    const auto count = static_cast<std::int64_t>(sample.size());
    if (execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t k = 0; k < count; ++k) {
            bad[k] = find_runs(sample[k]) != find_runs_oracle(sample[k]);
        }
    } else {
        for (std::int64_t k = 0; k < count; ++k) {
            bad[k] = find_runs(sample[k]) != find_runs_oracle(sample[k]);
        }
    }
    const auto mismatches = static_cast<std::size_t>(std::count(bad.begin(), bad.end(), 1));
    std::string computed = "words=" + std::to_string(sample.size()) + " mismatches=" + std::to_string(mismatches);
    if (mismatches > 0) {
        const auto first = static_cast<std::size_t>(std::find(bad.begin(), bad.end(), 1) - bad.begin());
        computed += " first: " + render_word(sample[first]);
    }
    report.add({"random n=" + std::to_string(options.random_count) + " len<=" + std::to_string(options.random_max_len),
                "0 mismatches", computed, mismatches == 0, ""});

    report.elapsed_seconds = clock.seconds();
    return report;
}

}  // namespace hpruns
