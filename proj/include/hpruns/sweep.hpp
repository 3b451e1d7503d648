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

#ifndef HPRUNS_SWEEP_HPP
#define HPRUNS_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hpruns/word.hpp"

namespace hpruns {

// Exhaustive enumeration of canonical words: words whose symbols first appear
// in increasing id order (restricted growth strings). Every word over `sigma`
// symbols is a renaming of exactly one canonical word, and run structure is
// invariant under renaming.
//
// The word space is cut into shards by fixed-length canonical prefixes. Each
// shard folds its words into a private partial result; partials are merged in
// shard order, so serial and parallel execution produce identical output.

enum class Execution { serial, parallel };

using Clock = std::chrono::steady_clock;

template <typename Partial>
struct SweepResult {
    Partial value;
    bool complete = true;          // false when the deadline cut the sweep short
    std::uint64_t words_visited = 0;
};

/// All canonical prefixes of the given depth, in lexicographic order.
std::vector<std::vector<Symbol>> canonical_prefixes(std::size_t depth, std::size_t sigma);

/// Number of canonical words of `length` over at most `sigma` symbols.
std::uint64_t canonical_count(std::size_t length, std::size_t sigma);

namespace detail {

inline constexpr std::size_t default_shard_depth = 10;

template <typename Partial, typename Visit>
void sweep_shard(std::vector<Symbol> buffer, std::size_t length, std::size_t sigma, Partial& partial,
                 std::uint64_t& visited, Visit& visit, const std::optional<Clock::time_point>& deadline,
                 std::atomic<bool>& expired) {
    std::size_t used = 0;  // number of distinct symbols in buffer
    for (Symbol s : buffer) {
        used = std::max<std::size_t>(used, s + std::size_t{1});
    }
    // Iterative DFS over completions in lexicographic order.
    const std::size_t fixed = buffer.size();
    std::vector<std::size_t> used_at(length + 1, used);
    buffer.resize(length);
    if (fixed == length) {
        visit(partial, Word(buffer, sigma));
        ++visited;
        return;
    }
    std::size_t pos = fixed;
    buffer[pos] = 0;
    for (;;) {
        const std::size_t limit = std::min(sigma, used_at[pos] + 1);
        if (buffer[pos] >= limit) {
            if (pos == fixed) {
                return;
            }
            --pos;
            ++buffer[pos];
            continue;
        }
        used_at[pos + 1] = std::max<std::size_t>(used_at[pos], buffer[pos] + std::size_t{1});
        if (pos + 1 < length) {
            ++pos;
            buffer[pos] = 0;
            continue;
        }
        visit(partial, Word(buffer, sigma));
        if ((++visited & 0xfff) == 0 && deadline && Clock::now() > *deadline) {
            expired.store(true, std::memory_order_relaxed);
        }
        if (expired.load(std::memory_order_relaxed)) {
            return;
        }
        ++buffer[pos];
    }
}

}  // namespace detail

/// Folds every canonical word of `length` over `sigma` symbols.
///   visit(Partial&, const Word&)    accumulates one word into a shard partial
///   merge(Partial&, Partial&&)      appends a later shard into an earlier one
template <typename Partial, typename Visit, typename Merge>
SweepResult<Partial> sweep_canonical(std::size_t length, std::size_t sigma, Execution execution, const Partial& init,
                                     Visit visit, Merge merge, std::optional<Clock::time_point> deadline = {}) {
    if (length == 0 || sigma == 0) {
        throw std::invalid_argument("sweep needs length >= 1 and sigma >= 1");
    }
    const auto shards = canonical_prefixes(std::min(length, detail::default_shard_depth), sigma);
    const auto shard_count = static_cast<std::int64_t>(shards.size());
    std::vector<Partial> partials(shards.size(), init);
    std::vector<std::uint64_t> visited(shards.size(), 0);
    std::atomic<bool> expired{false};

    if (execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t s = 0; s < shard_count; ++s) {
            if (expired.load(std::memory_order_relaxed)) continue;
            detail::sweep_shard(shards[s], length, sigma, partials[s], visited[s], visit, deadline, expired);
        }
    } else {
        for (std::int64_t s = 0; s < shard_count; ++s) {
            if (expired.load(std::memory_order_relaxed)) break;
            detail::sweep_shard(shards[s], length, sigma, partials[s], visited[s], visit, deadline, expired);
        }
    }

    SweepResult<Partial> result{init, !expired.load(), 0};
    for (std::size_t s = 0; s < partials.size(); ++s) {
        merge(result.value, std::move(partials[s]));
        result.words_visited += visited[s];
    }
    return result;
}

}  // namespace hpruns

#endif  // HPRUNS_SWEEP_HPP
