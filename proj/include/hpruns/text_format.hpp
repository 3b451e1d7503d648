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

#ifndef HPRUNS_TEXT_FORMAT_HPP
#define HPRUNS_TEXT_FORMAT_HPP

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hpruns/word.hpp"

namespace hpruns {

// Word text format, one word per line:
//   alphabet_size <= 26  ->  lowercase letters, 'a' is symbol 0
//   otherwise            ->  comma-separated decimal symbol ids
// Parsing accepts either form; the alphabet size of a parsed word is max id + 1.

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

enum class RenderStyle {
    automatic,  // letters when alphabet_size <= 26
    integers,   // always comma-separated ids
};

std::string render_word(const Word& w, RenderStyle style = RenderStyle::automatic);

/// Parses one line (trailing whitespace ignored). `line_number` is 1-based and only used in errors.
Word parse_word(std::string_view text, std::size_t line_number = 1);

/// Parses every non-blank line of a stream.
std::vector<Word> parse_words(std::istream& in);

}  // namespace hpruns

#endif  // HPRUNS_TEXT_FORMAT_HPP
