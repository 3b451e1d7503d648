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

#ifndef HPRUNS_CAMPAIGNS_HPP
#define HPRUNS_CAMPAIGNS_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hpruns/sweep.hpp"
#include "hpruns/word.hpp"

namespace hpruns {

struct VerifyCase {
    std::string id;
    std::string expected;
    std::string computed;
    bool pass = false;
    std::string note;  // e.g. "equality" / "excess 3"; empty when nothing to add
};

struct VerifyReport {
    std::string campaign;
    std::vector<VerifyCase> cases;
    bool all_pass = true;
    double elapsed_seconds = 0.0;

    void add(VerifyCase c) {
        all_pass = all_pass && c.pass;
        cases.push_back(std::move(c));
    }
};

/// Exact maximum hp-run count over all words of one length.
struct DensityFrontier {
    std::size_t length = 0;
    std::size_t sigma = 0;
    std::size_t max_hp_runs = 0;
    std::vector<Word> witnesses;  // lexicographically smallest maximizers, at most max_witnesses
    bool complete = true;
    std::uint64_t words_visited = 0;

    static constexpr std::size_t max_witnesses = 10;
};

/// Lengths and hp-run counts of f_0..f_6 against the published table.
VerifyReport verify_table1();

/// Measures f_0..f_max_n and checks the length recurrence exactly and the
/// count recurrences as lower bounds; reports equality or excess per step.
/// Requires 5 <= max_n.
VerifyReport verify_recurrences(std::size_t max_n);

/// Iterates the tripled-doubling construction; checks length' = 6 length,
/// count' >= 6 count + 1 (reporting equality or excess), and rising density.
VerifyReport verify_lemma5(const Word& base, std::size_t steps);

/// Exhaustive handle-mapping audit of all canonical words of length 1..max_len.
VerifyReport verify_handles(std::size_t max_len, std::size_t sigma, Execution execution = Execution::parallel);

/// Exhaustive check of hp-runs <= floor((n-1)/2) for lengths 1..max_len.
VerifyReport verify_upper_bound(std::size_t max_len, std::size_t sigma, Execution execution = Execution::parallel);

/// Structural facts about the two Fibonacci blocks and their products.
VerifyReport verify_block_structure();

/// Every run of the symbolic Fibonacci word h^n(alpha), n <= max_n, has exponent < 3.618.
VerifyReport verify_fibonacci_exponent(std::size_t max_n);

/// Fast detector against the quadratic oracle: every canonical word up to
/// `exhaustive_len` over `sigma`, plus `random_count` random words.
struct OracleSweepOptions {
    std::size_t exhaustive_len = 14;
    std::size_t exhaustive_sigma = 2;
    std::size_t random_count = 10'000;
    std::size_t random_max_len = 200;
    std::vector<std::size_t> random_sigmas{2, 3, 4};
    std::uint64_t seed = 20260101;
};
VerifyReport verify_oracle_equivalence(const OracleSweepOptions& options, Execution execution = Execution::parallel);

DensityFrontier exhaustive_frontier(std::size_t length, std::size_t sigma, Execution execution = Execution::parallel,
                                    std::optional<std::chrono::duration<double>> budget = {});

}  // namespace hpruns

#endif  // HPRUNS_CAMPAIGNS_HPP
