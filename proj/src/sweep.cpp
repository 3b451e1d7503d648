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

#include "hpruns/sweep.hpp"

namespace hpruns {

namespace {

void extend(std::vector<Symbol>& prefix, std::size_t used, std::size_t depth, std::size_t sigma,
            std::vector<std::vector<Symbol>>& out) {
    if (prefix.size() == depth) {
        out.push_back(prefix);
        return;
    }
    for (std::size_t s = 0; s < std::min(sigma, used + 1); ++s) {
        prefix.push_back(static_cast<Symbol>(s));
        extend(prefix, std::max(used, s + 1), depth, sigma, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<std::vector<Symbol>> canonical_prefixes(std::size_t depth, std::size_t sigma) {
    std::vector<std::vector<Symbol>> out;
    std::vector<Symbol> prefix;
    prefix.reserve(depth);
    extend(prefix, 0, depth, sigma, out);
    return out;
}

std::uint64_t canonical_count(std::size_t length, std::size_t sigma) {
    // ways[k] = number of canonical words of the current length using exactly k symbols
    std::vector<std::uint64_t> ways(sigma + 1, 0);
    ways[0] = 1;
    for (std::size_t i = 0; i < length; ++i) {
        std::vector<std::uint64_t> next(sigma + 1, 0);
        for (std::size_t k = 0; k <= sigma; ++k) {
            next[k] += ways[k] * k;
            if (k < sigma) next[k + 1] += ways[k];
        }
        ways = std::move(next);
    }
    std::uint64_t total = 0;
    for (std::uint64_t w : ways) total += w;
    return total;
}

}  // namespace hpruns
