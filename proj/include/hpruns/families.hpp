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

#ifndef HPRUNS_FAMILIES_HPP
#define HPRUNS_FAMILIES_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hpruns/word.hpp"

namespace hpruns {

// Two word families with many hp-runs per letter:
//
//  * the tripled-doubling family s_{k+1} = (s_k s'_k)^3, where s'_k is s_k over
//    a disjoint copy of its alphabet (symbol id shifted by the alphabet size);
//  * the Fibonacci family f_n = h^n(A) for the morphism A -> AB, B -> A, with
//    A and B expanded to two fixed binary blocks of 26 and 19 letters.

/// Thrown when a generated word would exceed the configured symbol limit.
class LengthLimitError : public std::length_error {
public:
    LengthLimitError(std::uint64_t requested, std::uint64_t limit);
    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t limit_;
};

inline constexpr std::uint64_t default_max_symbols = 100'000'000;

/// default_max_symbols, or HPRUNS_MAX_SYMBOLS when set to a positive integer.
std::uint64_t max_symbols();

enum class FamilyKind { lemma5, fibonacci };

struct FamilySpec {
    FamilyKind kind = FamilyKind::fibonacci;
    std::size_t step = 0;
    Word base = Word::from_letters("aaa");  // tripled-doubling family only
};

Word generate(const FamilySpec& spec, std::uint64_t limit = max_symbols());

// --- tripled-doubling family ---

Word lemma5_step(const Word& s, std::uint64_t limit = max_symbols());
Word lemma5_word(const Word& base, std::size_t steps, std::uint64_t limit = max_symbols());

// --- Fibonacci family ---

enum class Block : std::uint8_t { alpha, beta };

/// X = (a^3 b^3)^3, Y = a^4 b^3 a.
Word block_x();
Word block_y();
/// alpha = XY (26 letters), beta = Xa (19 letters).
Word alpha();
Word beta();

/// h^n(alpha) over the two blocks.
std::vector<Block> fib_symbolic(std::size_t n, std::uint64_t limit = max_symbols());

/// Symbolic sequence as a binary word, alpha -> 0, beta -> 1.
Word fib_symbolic_word(std::size_t n, std::uint64_t limit = max_symbols());

/// Blocks expanded to letters over {a, b}.
Word expand_blocks(const std::vector<Block>& blocks);
Word fib_word(std::size_t n, std::uint64_t limit = max_symbols());

/// 'A' for alpha, 'B' for beta.
std::string render_symbolic(const std::vector<Block>& blocks);

struct PredictedCounts {
    std::size_t n = 0;
    std::uint64_t ell = 0;
    std::uint64_t r = 0;
    friend bool operator==(const PredictedCounts&, const PredictedCounts&) = default;
};

/// Published seed rows (lengths and hp-run counts of f_0..f_6).
struct TableRow {
    std::size_t n;
    std::uint64_t r;
    std::uint64_t ell;
};
inline constexpr TableRow fibonacci_table[] = {
    {0, 9, 26}, {1, 17, 45}, {2, 26, 71}, {3, 45, 116}, {4, 71, 187}, {5, 119, 303}, {6, 192, 490},
};

/// Extra hp-runs created when f_n = f_{n-1} f_{n-2} is formed: n-4 for even n, n-2 for odd n.
std::uint64_t concatenation_gain(std::size_t n);

/// Rows 0..4 are copied from the seed table; rows n >= 5 iterate
/// ell_n = ell_{n-1} + ell_{n-2} and r_n = r_{n-1} + r_{n-2} + gain(n) with equality.
/// Throws std::invalid_argument when max_n < 4.
std::vector<PredictedCounts> predicted_counts(std::size_t max_n);

}  // namespace hpruns

#endif  // HPRUNS_FAMILIES_HPP
