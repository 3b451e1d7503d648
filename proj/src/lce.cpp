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

#include "hpruns/lce.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <utility>

namespace hpruns {

std::vector<std::uint32_t> suffix_array(std::span<const Symbol> text) {
    const auto n = static_cast<std::uint32_t>(text.size());
    std::vector<std::uint32_t> sa(n);
    if (n == 0) {
        return sa;
    }

    // initial ranks: symbols compressed to 0..distinct-1
    std::vector<Symbol> distinct(text.begin(), text.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::uint32_t> rank(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        rank[i] = static_cast<std::uint32_t>(std::lower_bound(distinct.begin(), distinct.end(), text[i]) -
                                             distinct.begin());
    }
    std::iota(sa.begin(), sa.end(), 0u);
    std::sort(sa.begin(), sa.end(), [&](std::uint32_t a, std::uint32_t b) {
        return rank[a] != rank[b] ? rank[a] < rank[b] : a < b;
    });
    if (rank[sa[n - 1]] == n - 1) {
        return sa;
    }

    std::vector<std::uint32_t> order(n);
    std::vector<std::uint32_t> next_rank(n);
    std::vector<std::uint32_t> count(std::max<std::size_t>(n, distinct.size()) + 1);
    for (std::uint32_t k = 1;; k <<= 1) {
        // order by second key: suffixes without a second half come first
        std::uint32_t p = 0;
        for (std::uint32_t i = n - std::min(k, n); i < n; ++i) {
            order[p++] = i;
        }
        for (std::uint32_t r = 0; r < n; ++r) {
            if (sa[r] >= k) {
                order[p++] = sa[r] - k;
            }
        }
        // stable counting sort by first key
        std::fill(count.begin(), count.end(), 0u);
        for (std::uint32_t i = 0; i < n; ++i) {
            ++count[rank[i] + 1];
        }
        for (std::size_t c = 1; c < count.size(); ++c) {
            count[c] += count[c - 1];
        }
        for (std::uint32_t r = 0; r < n; ++r) {
            sa[count[rank[order[r]]]++] = order[r];
        }

        auto second = [&](std::uint32_t i) -> std::int64_t { return i + k < n ? rank[i + k] : -1; };
        next_rank[sa[0]] = 0;
        for (std::uint32_t r = 1; r < n; ++r) {
            const std::uint32_t prev = sa[r - 1];
            const std::uint32_t cur = sa[r];
            const bool same = rank[prev] == rank[cur] && second(prev) == second(cur);
            next_rank[cur] = next_rank[prev] + (same ? 0 : 1);
        }
        rank.swap(next_rank);
        if (rank[sa[n - 1]] == n - 1 || k >= n) {
            break;
        }
    }
    return sa;
}

LceIndex::LceIndex(std::span<const Symbol> text)
    : n_(static_cast<std::uint32_t>(text.size())), sa_(suffix_array(text)), rank_(n_) {
    for (std::uint32_t r = 0; r < n_; ++r) {
        rank_[sa_[r]] = r;
    }

    // Kasai
    std::vector<std::uint32_t> lcp(n_, 0);
    std::uint32_t h = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (rank_[i] == 0) {
            h = 0;
            continue;
        }
        const std::uint32_t j = sa_[rank_[i] - 1];
        while (i + h < n_ && j + h < n_ && text[i + h] == text[j + h]) {
            ++h;
        }
        lcp[rank_[i]] = h;
        if (h > 0) {
            --h;
        }
    }

    const std::size_t levels = n_ > 1 ? static_cast<std::size_t>(std::bit_width(n_)) : 1;
    sparse_.reserve(levels);
    sparse_.push_back(std::move(lcp));
    for (std::size_t k = 1; k < levels; ++k) {
        const std::size_t half = std::size_t{1} << (k - 1);
        const auto& prev = sparse_[k - 1];
        if (prev.size() <= half) {
            break;
        }
        std::vector<std::uint32_t> cur(prev.size() - half);
        for (std::size_t i = 0; i < cur.size(); ++i) {
            cur[i] = std::min(prev[i], prev[i + half]);
        }
        sparse_.push_back(std::move(cur));
    }
}

std::uint32_t LceIndex::range_min(std::uint32_t lo, std::uint32_t hi) const {
    // inclusive [lo, hi]
    const auto k = static_cast<std::size_t>(std::bit_width(hi - lo + 1) - 1);
    return std::min(sparse_[k][lo], sparse_[k][hi + 1 - (std::uint32_t{1} << k)]);
}

std::uint32_t LceIndex::lce(std::uint32_t i, std::uint32_t j) const {
    if (i == j) {
        return n_ - i;
    }
    std::uint32_t ri = rank_[i];
    std::uint32_t rj = rank_[j];
    if (ri > rj) {
        std::swap(ri, rj);
    }
    return range_min(ri + 1, rj);
}

}  // namespace hpruns
