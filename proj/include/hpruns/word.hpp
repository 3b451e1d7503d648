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

#ifndef HPRUNS_WORD_HPP
#define HPRUNS_WORD_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace hpruns {

using Symbol = std::uint32_t;

/// An immutable sequence of integer symbols over an alphabet {0, ..., alphabet_size-1}.
///
/// Symbols are plain integers rather than characters because some word families
/// double their alphabet on every step. The natural integer order on symbol ids
/// is the lexicographic order used by rotations and prime-word tests.
class Word {
public:
    Word() = default;

    /// Throws std::invalid_argument if any symbol is >= alphabet_size.
    Word(std::vector<Symbol> symbols, std::size_t alphabet_size);

    /// Alphabet size is inferred as max symbol + 1 (1 for the empty word).
    explicit Word(std::vector<Symbol> symbols);

    Word(std::initializer_list<Symbol> symbols);

    /// Builds a word from lowercase letters, 'a' -> 0, ..., 'z' -> 25.
    static Word from_letters(std::string_view letters);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    std::size_t alphabet_size() const noexcept { return alphabet_size_; }

    /// 0-based access.
    Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }

    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    /// 0-based half-open factor [first, first + length), same alphabet.
    Word factor(std::size_t first, std::size_t length) const;

    /// Rotation yx of w = xy where |x| = shift.
    Word rotate(std::size_t shift) const;

    Word concat(const Word& other) const;
    Word power(std::size_t k) const;

    friend bool operator==(const Word& a, const Word& b) noexcept { return a.symbols_ == b.symbols_; }
    friend auto operator<=>(const Word& a, const Word& b) noexcept { return a.symbols_ <=> b.symbols_; }

private:
    std::vector<Symbol> symbols_;
    std::size_t alphabet_size_ = 1;
};

/// Smallest p >= 1 with w[i] == w[i+p] for every valid i. Throws on an empty word.
std::size_t period(const Word& w);

/// Length of the longest proper border. Failure-function recurrence, O(|w|).
std::size_t border_length(const Word& w);

/// Failure function: entry i is the longest proper border of w[0..i].
std::vector<std::size_t> border_array(std::span<const Symbol> w);

Word primitive_root(const Word& w);
bool is_primitive(const Word& w);

/// Start index k such that w.rotate(k) is the least rotation (smallest such k).
std::size_t min_rotation_index(const Word& w);
std::size_t max_rotation_index(const Word& w);

Word min_rotation(const Word& w);
Word max_rotation(const Word& w);

/// Primitive and lexicographically minimal or maximal among its rotations.
bool is_prime(const Word& w);

}  // namespace hpruns

#endif  // HPRUNS_WORD_HPP
