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

#include "hpruns/families.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace hpruns {

LengthLimitError::LengthLimitError(std::uint64_t requested, std::uint64_t limit)
    : std::length_error("word of " + std::to_string(requested) + " symbols exceeds the limit of " +
                        std::to_string(limit) + " symbols (HPRUNS_MAX_SYMBOLS)"),
      limit_(limit) {}

std::uint64_t max_symbols() {
    const char* env = std::getenv("HPRUNS_MAX_SYMBOLS");
    if (env == nullptr) {
        return default_max_symbols;
    }
    std::uint64_t value = 0;
    const char* last = env + std::strlen(env);
    const auto [ptr, ec] = std::from_chars(env, last, value);
    if (ec != std::errc{} || ptr != last || value == 0) {
        return default_max_symbols;
    }
    return value;
}

namespace {

void check_limit(std::uint64_t requested, std::uint64_t limit) {
    if (requested > limit) {
        throw LengthLimitError(requested, limit);
    }
}

}  // namespace

Word lemma5_step(const Word& s, std::uint64_t limit) {
    if (s.empty()) {
        throw std::invalid_argument("cannot extend an empty word");
    }
    check_limit(6 * static_cast<std::uint64_t>(s.size()), limit);
    const auto shift = static_cast<Symbol>(s.alphabet_size());
    std::vector<Symbol> block;
    block.reserve(2 * s.size());
    block.insert(block.end(), s.begin(), s.end());
    for (Symbol c : s) {
        block.push_back(c + shift);
    }
    return Word(std::move(block), 2 * s.alphabet_size()).power(3);
}

Word lemma5_word(const Word& base, std::size_t steps, std::uint64_t limit) {
    if (base.empty()) {
        throw std::invalid_argument("cannot extend an empty word");
    }
    std::uint64_t length = base.size();
    for (std::size_t k = 0; k < steps; ++k) {
        length *= 6;
        check_limit(length, limit);
    }
    Word s = base;
    for (std::size_t k = 0; k < steps; ++k) {
        s = lemma5_step(s, limit);
    }
    return s;
}

Word block_x() { return Word::from_letters("aaabbb").power(3); }
Word block_y() { return Word::from_letters("aaaabbba"); }
Word alpha() { return block_x().concat(block_y()); }
Word beta() { return block_x().concat(Word::from_letters("a")); }

std::vector<Block> fib_symbolic(std::size_t n, std::uint64_t limit) {
    // |h^n(alpha)| is the Fibonacci number F(n+2)
    std::uint64_t prev = 1;
    std::uint64_t cur = 1;
    for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t next = prev + cur;
        prev = cur;
        cur = next;
        check_limit(cur, limit);
    }

    std::vector<Block> word{Block::alpha};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Block> next;
        next.reserve(word.size() * 2);
        for (Block b : word) {
            next.push_back(Block::alpha);
            if (b == Block::alpha) {
                next.push_back(Block::beta);
            }
        }
        word = std::move(next);
    }
    return word;
}

Word fib_symbolic_word(std::size_t n, std::uint64_t limit) {
    const auto blocks = fib_symbolic(n, limit);
    std::vector<Symbol> symbols;
    symbols.reserve(blocks.size());
    for (Block b : blocks) {
        symbols.push_back(b == Block::alpha ? 0 : 1);
    }
    return Word(std::move(symbols), 2);
}

Word expand_blocks(const std::vector<Block>& blocks) {
    const Word a = alpha();
    const Word b = beta();
    std::vector<Symbol> symbols;
    for (Block block : blocks) {
        const Word& piece = block == Block::alpha ? a : b;
        symbols.insert(symbols.end(), piece.begin(), piece.end());
    }
    return Word(std::move(symbols), 2);
}

Word fib_word(std::size_t n, std::uint64_t limit) {
    const auto blocks = fib_symbolic(n, limit);
    std::uint64_t length = 0;
    for (Block b : blocks) {
        length += b == Block::alpha ? 26 : 19;
    }
    check_limit(length, limit);
    return expand_blocks(blocks);
}

std::string render_symbolic(const std::vector<Block>& blocks) {
    std::string out;
    out.reserve(blocks.size());
    for (Block b : blocks) {
        out.push_back(b == Block::alpha ? 'A' : 'B');
    }
    return out;
}

Word generate(const FamilySpec& spec, std::uint64_t limit) {
    switch (spec.kind) {
        case FamilyKind::lemma5:
            return lemma5_word(spec.base, spec.step, limit);
        case FamilyKind::fibonacci:
            return fib_word(spec.step, limit);
    }
    throw std::invalid_argument("unknown family");
}

std::uint64_t concatenation_gain(std::size_t n) {
    if (n < 5) {
        throw std::invalid_argument("concatenation gain is defined for n >= 5");
    }
    return n % 2 == 0 ? n - 4 : n - 2;
}

std::vector<PredictedCounts> predicted_counts(std::size_t max_n) {
    if (max_n < 4) {
        throw std::invalid_argument("predicted_counts needs max_n >= 4 (seed rows 0..4)");
    }
    std::vector<PredictedCounts> rows;
    rows.reserve(max_n + 1);
    for (std::size_t n = 0; n <= 4; ++n) {
        rows.push_back({n, fibonacci_table[n].ell, fibonacci_table[n].r});
    }
    for (std::size_t n = 5; n <= max_n; ++n) {
        rows.push_back({n, rows[n - 1].ell + rows[n - 2].ell, rows[n - 1].r + rows[n - 2].r + concatenation_gain(n)});
    }
    return rows;
}

}  // namespace hpruns
