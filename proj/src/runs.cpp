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

#include "hpruns/runs.hpp"

#include <algorithm>
#include <stdexcept>

#include "hpruns/lce.hpp"

namespace hpruns {

namespace {

void require_nonempty(const Word& w) {
    if (w.empty()) {
        throw std::invalid_argument("runs are defined only for nonempty words");
    }
}

void normalize(std::vector<Run>& runs) {
    std::sort(runs.begin(), runs.end());
    runs.erase(std::unique(runs.begin(), runs.end()), runs.end());
}

// Naive shortest period of w[first, first + length).
std::size_t naive_period(const Word& w, std::size_t first, std::size_t length) {
    for (std::size_t p = 1; p < length; ++p) {
        bool ok = true;
        for (std::size_t i = first; i + p < first + length; ++i) {
            if (w[i] != w[i + p]) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return p;
        }
    }
    return length;
}

}  // namespace

RunSet find_runs_oracle(const Word& w) {
    require_nonempty(w);
    const std::size_t n = w.size();
    RunSet out;
    out.word_length = n;
    for (std::size_t p = 1; 2 * p <= n; ++p) {
        std::size_t i = 0;
        while (i + p < n) {
            if (w[i] != w[i + p]) {
                ++i;
                continue;
            }
            // maximal stretch [a, b) of matches at distance p
            const std::size_t a = i;
            while (i + p < n && w[i] == w[i + p]) {
                ++i;
            }
            const std::size_t matches = i - a;
            if (matches >= p && naive_period(w, a, matches + p) == p) {
                out.runs.push_back(Run{a + 1, a + matches + p, p});
            }
        }
    }
    normalize(out.runs);
    return out;
}

RunSet find_runs(const Word& w) {
    require_nonempty(w);
    const auto n = static_cast<std::uint32_t>(w.size());
    const std::span<const Symbol> text = w.symbols();
    std::vector<Symbol> reversed(text.rbegin(), text.rend());

    const LceIndex forward(text);
    const LceIndex backward(reversed);
    // common suffix length of w[0..a] and w[0..b]
    auto lcs = [&](std::uint32_t a, std::uint32_t b) { return backward.lce(n - 1 - a, n - 1 - b); };

    RunSet out;
    out.word_length = n;
    std::vector<std::uint32_t> stack;
    stack.reserve(n);

    for (const bool inverted : {false, true}) {
        // Suffix order under the chosen symbol order; a proper prefix is smaller.
        auto suffix_less = [&](std::uint32_t a, std::uint32_t b) {
            const std::uint32_t l = forward.lce(a, b);
            if (a + l == n) return true;
            if (b + l == n) return false;
            return inverted ? text[a + l] > text[b + l] : text[a + l] < text[b + l];
        };

        stack.clear();
        for (std::uint32_t i = n; i-- > 0;) {
            // next smaller suffix to the right ends the longest Lyndon word at i
            while (!stack.empty() && !suffix_less(stack.back(), i)) {
                stack.pop_back();
            }
            const std::uint32_t j = stack.empty() ? n : stack.back();
            stack.push_back(i);
            if (j == n) {
                continue;
            }
            const std::uint32_t p = j - i;
            const std::uint32_t right = forward.lce(i, j);
            const std::uint32_t left = i > 0 ? lcs(i - 1, j - 1) : 0;
            const std::uint32_t first = i - left;
            const std::uint32_t last = j + right;  // exclusive
            if (last - first >= 2 * p) {
                out.runs.push_back(Run{first + std::size_t{1}, last, p});
            }
        }
    }
    normalize(out.runs);
    return out;
}

RunSet hp_runs(const RunSet& all) {
    RunSet out;
    out.word_length = all.word_length;
    std::copy_if(all.runs.begin(), all.runs.end(), std::back_inserter(out.runs),
                 [](const Run& r) { return r.highly_periodic(); });
    return out;
}

RunSet hp_runs(const Word& w) { return hp_runs(find_runs(w)); }

Density hp_density(const Word& w) { return Density{hp_runs(w).size(), w.size()}; }

std::optional<std::string> run_violation(const Word& w, const Run& run) {
    const std::size_t n = w.size();
    if (run.start < 1 || run.start > run.end || run.end > n) {
        return "bounds";
    }
    if (run.period == 0 || period(w.factor(run.start - 1, run.length())) != run.period) {
        return "not the shortest period";
    }
    if (2 * run.period > run.length()) {
        return "exponent below 2";
    }
    // 1-based u[k] is w[k - 1]
    if (run.start > 1 && w[run.start - 2] == w[run.start + run.period - 2]) {
        return "extends to the left";
    }
    if (run.end < n && w[run.end - run.period] == w[run.end]) {
        return "extends to the right";
    }
    return std::nullopt;
}

}  // namespace hpruns
