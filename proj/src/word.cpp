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

#include "hpruns/word.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace hpruns {

Word::Word(std::vector<Symbol> symbols, std::size_t alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
    if (alphabet_size_ == 0) {
        throw std::invalid_argument("alphabet size must be positive");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i] >= alphabet_size_) {
            throw std::invalid_argument("symbol " + std::to_string(symbols_[i]) + " at index " +
                                        std::to_string(i) + " is outside alphabet of size " +
                                        std::to_string(alphabet_size_));
        }
    }
}

Word::Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    if (!symbols_.empty()) {
        alphabet_size_ = static_cast<std::size_t>(*std::max_element(symbols_.begin(), symbols_.end())) + 1;
    }
}

Word::Word(std::initializer_list<Symbol> symbols) : Word(std::vector<Symbol>(symbols)) {}

Word Word::from_letters(std::string_view letters) {
    std::vector<Symbol> symbols;
    symbols.reserve(letters.size());
    for (std::size_t i = 0; i < letters.size(); ++i) {
        const char c = letters[i];
        if (c < 'a' || c > 'z') {
            throw std::invalid_argument("invalid letter '" + std::string(1, c) + "' at index " + std::to_string(i));
        }
        symbols.push_back(static_cast<Symbol>(c - 'a'));
    }
    return Word(std::move(symbols));
}

Word Word::factor(std::size_t first, std::size_t length) const {
    if (first > size() || length > size() - first) {
        throw std::out_of_range("factor out of range");
    }
    return Word(std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(first),
                                    symbols_.begin() + static_cast<std::ptrdiff_t>(first + length)),
                alphabet_size_);
}

Word Word::rotate(std::size_t shift) const {
    if (empty()) {
        return *this;
    }
    std::vector<Symbol> out(symbols_);
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % size()), out.end());
    return Word(std::move(out), alphabet_size_);
}

Word Word::concat(const Word& other) const {
    std::vector<Symbol> out;
    out.reserve(size() + other.size());
    out.insert(out.end(), symbols_.begin(), symbols_.end());
    out.insert(out.end(), other.symbols_.begin(), other.symbols_.end());
    return Word(std::move(out), std::max(alphabet_size_, other.alphabet_size_));
}

Word Word::power(std::size_t k) const {
    std::vector<Symbol> out;
    out.reserve(size() * k);
    for (std::size_t i = 0; i < k; ++i) {
        out.insert(out.end(), symbols_.begin(), symbols_.end());
    }
    return Word(std::move(out), alphabet_size_);
}

std::vector<std::size_t> border_array(std::span<const Symbol> w) {
    std::vector<std::size_t> fail(w.size(), 0);
    std::size_t b = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        while (b > 0 && w[i] != w[b]) {
            b = fail[b - 1];
        }
        if (w[i] == w[b]) {
            ++b;
        }
        fail[i] = b;
    }
    return fail;
}

namespace {

void require_nonempty(const Word& w, const char* what) {
    if (w.empty()) {
        throw std::invalid_argument(what);
    }
}

// Two-pointer least-rotation search under an arbitrary symbol order; O(n).
template <typename Less>
std::size_t extreme_rotation_index(std::span<const Symbol> s, Less less) {
    const std::size_t n = s.size();
    std::size_t i = 0;
    std::size_t j = 1;
    std::size_t k = 0;
    while (i < n && j < n && k < n) {
        const Symbol a = s[(i + k) % n];
        const Symbol b = s[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (less(b, a)) {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if (i == j) {
            ++j;
        }
        k = 0;
    }
    return std::min(i, j);
}

}  // namespace

std::size_t border_length(const Word& w) {
    require_nonempty(w, "empty word has no border");
    return border_array(w.symbols()).back();
}

std::size_t period(const Word& w) {
    require_nonempty(w, "empty word has no period");
    return w.size() - border_array(w.symbols()).back();
}

Word primitive_root(const Word& w) {
    require_nonempty(w, "empty word has no primitive root");
    const std::size_t p = period(w);
    return w.size() % p == 0 ? w.factor(0, p) : w;
}

bool is_primitive(const Word& w) {
    require_nonempty(w, "empty word has no primitive root");
    const std::size_t p = period(w);
    return p == w.size() || w.size() % p != 0;
}

std::size_t min_rotation_index(const Word& w) {
    require_nonempty(w, "empty word has no rotations");
    return extreme_rotation_index(w.symbols(), std::less<Symbol>{});
}

std::size_t max_rotation_index(const Word& w) {
    require_nonempty(w, "empty word has no rotations");
    return extreme_rotation_index(w.symbols(), std::greater<Symbol>{});
}

Word min_rotation(const Word& w) { return w.rotate(min_rotation_index(w)); }

Word max_rotation(const Word& w) { return w.rotate(max_rotation_index(w)); }

bool is_prime(const Word& w) {
    if (!is_primitive(w)) {
        return false;
    }
    // A primitive word has a unique least (greatest) rotation, so index 0 decides.
    return min_rotation_index(w) == 0 || max_rotation_index(w) == 0;
}

}  // namespace hpruns
