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

#ifndef HPRUNS_LCE_HPP
#define HPRUNS_LCE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hpruns/word.hpp"

namespace hpruns {

/// Suffix array by prefix doubling with counting sort, O(n log n).
/// A suffix that is a proper prefix of another sorts first.
std::vector<std::uint32_t> suffix_array(std::span<const Symbol> text);

/// Longest-common-extension queries in O(1) after O(n log n) preprocessing
/// (suffix array, Kasai LCP, sparse-table range minimum).
class LceIndex {
public:
    explicit LceIndex(std::span<const Symbol> text);

    /// Length of the longest common prefix of the suffixes starting at i and j (0-based).
    std::uint32_t lce(std::uint32_t i, std::uint32_t j) const;

    std::uint32_t rank(std::uint32_t i) const { return rank_[i]; }
    std::span<const std::uint32_t> sa() const { return sa_; }
    std::uint32_t size() const { return n_; }

private:
    std::uint32_t range_min(std::uint32_t lo, std::uint32_t hi) const;

    std::uint32_t n_ = 0;
    std::vector<std::uint32_t> sa_;
    std::vector<std::uint32_t> rank_;
    // sparse_[k][i] = min lcp over [i, i + 2^k); lcp[r] pairs sa[r-1] with sa[r].
    std::vector<std::vector<std::uint32_t>> sparse_;
};

}  // namespace hpruns

#endif  // HPRUNS_LCE_HPP
