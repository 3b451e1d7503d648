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

#include "hpruns/text_format.hpp"

#include <cctype>
#include <limits>

namespace hpruns {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

std::string render_word(const Word& w, RenderStyle style) {
    std::string out;
    if (style == RenderStyle::automatic && w.alphabet_size() <= 26) {
        out.reserve(w.size());
        for (Symbol s : w) {
            out.push_back(static_cast<char>('a' + s));
        }
        return out;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += std::to_string(w[i]);
    }
    return out;
}

Word parse_word(std::string_view text, std::size_t line_number) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw ParseError(line_number, 1, "empty word");
    }

    const bool numeric = std::isdigit(static_cast<unsigned char>(text.front())) != 0;
    std::vector<Symbol> symbols;
    if (!numeric) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char c = text[i];
            if (c < 'a' || c > 'z') {
                throw ParseError(line_number, i + 1, std::string("unexpected character '") + c + "'");
            }
            symbols.push_back(static_cast<Symbol>(c - 'a'));
        }
        return Word(std::move(symbols));
    }

    std::uint64_t value = 0;
    bool have_digit = false;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            if (!have_digit) {
                throw ParseError(line_number, i + 1, "expected a symbol id");
            }
            symbols.push_back(static_cast<Symbol>(value));
            value = 0;
            have_digit = false;
            continue;
        }
        const char c = text[i];
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError(line_number, i + 1, std::string("unexpected character '") + c + "'");
        }
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
        if (value >= std::numeric_limits<Symbol>::max()) {
            throw ParseError(line_number, i + 1, "symbol id too large");
        }
        have_digit = true;
    }
    return Word(std::move(symbols));
}

std::vector<Word> parse_words(std::istream& in) {
    std::vector<Word> words;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        words.push_back(parse_word(line, line_number));
    }
    return words;
}

}  // namespace hpruns
