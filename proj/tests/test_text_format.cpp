#include "doctest.h"

#include <sstream>

#include "hpruns/text_format.hpp"

using namespace hpruns;

TEST_CASE("letters render and parse") {
    const Word w = Word::from_letters("aabaa");
    CHECK(render_word(w) == "aabaa");
    CHECK(parse_word("aabaa") == w);
    CHECK(parse_word("abc \r").size() == 3);
}

TEST_CASE("integer form for large alphabets") {
    const Word w({0, 27, 3}, 28);
    CHECK(render_word(w) == "0,27,3");
    CHECK(parse_word("0,27,3") == w);
    CHECK(render_word(Word::from_letters("ab"), RenderStyle::integers) == "0,1");
}

TEST_CASE("malformed input names line and column") {
    CHECK_THROWS_WITH_AS(parse_word("abC", 4), "line 4, column 3: unexpected character 'C'", ParseError);
    CHECK_THROWS_WITH_AS(parse_word("1,,2"), "line 1, column 3: expected a symbol id", ParseError);
    CHECK_THROWS_WITH_AS(parse_word("1,x"), "line 1, column 3: unexpected character 'x'", ParseError);
    CHECK_THROWS_AS(parse_word(""), ParseError);
    CHECK_THROWS_AS(parse_word("99999999999"), ParseError);

    std::istringstream in("aa\n\nab#\n");
    try {
        (void)parse_words(in);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 3);
    }
}

TEST_CASE("stream parsing skips blank lines") {
    std::istringstream in("aaa\n\n  \nabab\n0,1,30\n");
    const auto words = parse_words(in);
    REQUIRE(words.size() == 3);
    CHECK(words[1] == Word::from_letters("abab"));
    CHECK(words[2].alphabet_size() == 31);
}
