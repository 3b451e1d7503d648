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

#ifndef HPRUNS_RUNS_HPP
#define HPRUNS_RUNS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hpruns/word.hpp"

namespace hpruns {

/// A maximal repetition u[start..end] (1-based, inclusive) with its shortest period.
struct Run {
    std::size_t start = 0;
    std::size_t end = 0;
    std::size_t period = 0;

    std::size_t length() const noexcept { return end - start + 1; }
    double exponent() const noexcept { return static_cast<double>(length()) / static_cast<double>(period); }
    /// Highly periodic: exponent at least 3.
    bool highly_periodic() const noexcept { return 3 * period <= length(); }

    friend bool operator==(const Run&, const Run&) = default;
    /// (start, period, end): the report ordering.
    friend std::strong_ordering operator<=>(const Run& a, const Run& b) noexcept {
        if (auto c = a.start <=> b.start; c != 0) return c;
        if (auto c = a.period <=> b.period; c != 0) return c;
        return a.end <=> b.end;
    }
};

/// Runs sorted by (start, period), duplicate-free.
struct RunSet {
    std::vector<Run> runs;
    std::size_t word_length = 0;

    std::size_t size() const noexcept { return runs.size(); }
    friend bool operator==(const RunSet&, const RunSet&) = default;
};

/// Unreduced ratio count / length; "0/2" and "9/26" are kept as produced.
struct Density {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Density&, const Density&) = default;
    friend std::strong_ordering operator<=>(const Density& a, const Density& b) noexcept {
        return a.num * b.den <=> b.num * a.den;
    }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// Quadratic reference detector: scans every period for maximal stretches of
/// w[i] == w[i+p] and keeps those whose shortest period is p. Pre: |w| >= 1.
RunSet find_runs_oracle(const Word& w);

/// Near-linear detector: longest Lyndon words under both symbol orders give
/// candidate roots, which are extended with LCE queries in both directions.
/// Output is identical to find_runs_oracle. Pre: |w| >= 1.
RunSet find_runs(const Word& w);

/// Runs with 3 * period <= length.
RunSet hp_runs(const Word& w);
RunSet hp_runs(const RunSet& all);

Density hp_density(const Word& w);

/// Re-checks a run against the word from first principles; returns a
/// description of the first violated invariant, or nullopt.
std::optional<std::string> run_violation(const Word& w, const Run& run);

}  // namespace hpruns

#endif  // HPRUNS_RUNS_HPP
