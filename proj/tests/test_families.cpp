#include "doctest.h"

#include <cstdlib>

#include "hpruns/families.hpp"
#include "hpruns/runs.hpp"
#include "oracles.hpp"

using namespace hpruns;

namespace {
Word w(const char* letters) { return Word::from_letters(letters); }
}  // namespace

TEST_CASE("tripled doubling step") {
    const Word a3({0, 0, 0}, 1);
    const Word s1 = lemma5_step(a3);
    CHECK(s1 == Word({0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 1}, 2));
    CHECK(s1.alphabet_size() == 2);
    CHECK(s1.size() == 18);
    // brute-force count on the 18-letter word
    CHECK(find_runs(s1) == find_runs_oracle(s1));
    CHECK(hp_runs(find_runs_oracle(s1)).size() == 7);

    Word s = a3;
    for (std::size_t len : {3u, 18u, 108u}) {
        REQUIRE(s.size() == len);
        const Word next = lemma5_step(s);
        CHECK(next.size() == 6 * len);
        CHECK(next.alphabet_size() == 2 * s.alphabet_size());
        // the copy uses a disjoint alphabet
        const Word copy = next.factor(s.size(), s.size());
        for (Symbol c : copy) CHECK(c >= s.alphabet_size());
        s = next;
    }
    CHECK_THROWS_AS(lemma5_step(Word{}), std::invalid_argument);
}

TEST_CASE("tripled doubling word") {
    const Word a3 = w("aaa");
    CHECK(lemma5_word(a3, 0) == a3);
    const Word s2 = lemma5_word(a3, 2);
    CHECK(s2.size() == 108);
    CHECK(s2.alphabet_size() == 4);
    const Word s3 = lemma5_word(a3, 3);
    CHECK(s3.size() == 648);
    // brute-force counts for k = 0..3
    std::vector<std::size_t> counts;
    for (std::size_t k = 0; k <= 3; ++k) counts.push_back(hp_runs(find_runs_oracle(lemma5_word(a3, k))).size());
    CHECK(counts == std::vector<std::size_t>{1, 7, 43, 259});
    CHECK(hp_runs(s3).size() == 259);

    CHECK_THROWS_AS(lemma5_word(a3, 12, 1'000'000), LengthLimitError);
    try {
        (void)lemma5_word(a3, 4, 1000);
        FAIL("expected a limit error");
    } catch (const LengthLimitError& e) {
        CHECK(e.limit() == 1000);
        CHECK(std::string(e.what()).find("1000") != std::string::npos);
    }
}

TEST_CASE("alpha and beta blocks") {
    CHECK(alpha().size() == 26);
    CHECK(beta().size() == 19);
    CHECK(alpha().concat(beta()).size() == 45);
    const Word a = alpha();
    const Word b = beta();
    CHECK(std::equal(b.begin(), b.end(), a.begin()));
    CHECK(alpha() == w("aaabbbaaabbbaaabbbaaaabbba"));
    CHECK(beta() == w("aaabbbaaabbbaaabbba"));
}

TEST_CASE("symbolic Fibonacci words") {
    using B = Block;
    CHECK(fib_symbolic(0) == std::vector<B>{B::alpha});
    CHECK(fib_symbolic(3) == std::vector<B>{B::alpha, B::beta, B::alpha, B::alpha, B::beta});
    const auto f6 = fib_symbolic(6);
    CHECK(f6.size() == 21);
    CHECK(render_symbolic(f6) == "ABAABABAABAABABAABABA");
    CHECK(render_symbolic(fib_symbolic(5)) == "ABAABABAABAAB");
    for (std::size_t n = 2; n <= 20; ++n) {
        auto joined = fib_symbolic(n - 1);
        const auto tail = fib_symbolic(n - 2);
        joined.insert(joined.end(), tail.begin(), tail.end());
        REQUIRE(fib_symbolic(n) == joined);
    }
    CHECK_THROWS_AS(fib_symbolic(40, 1000), LengthLimitError);
}

TEST_CASE("expanded Fibonacci words") {
    CHECK(fib_word(0) == alpha());
    CHECK(fib_word(4).size() == 187);
    const Word f19 = fib_word(19);
    CHECK(f19.size() == 255'329);
    const auto blocks = fib_symbolic(19);
    const auto alphas = static_cast<std::size_t>(std::count(blocks.begin(), blocks.end(), Block::alpha));
    CHECK(f19.size() == 26 * alphas + 19 * (blocks.size() - alphas));
    CHECK_THROWS_AS(fib_word(19, 100'000), LengthLimitError);
}

TEST_CASE("generate dispatches on the family kind") {
    CHECK(generate({FamilyKind::fibonacci, 2, {}}).size() == 71);
    CHECK(generate({FamilyKind::lemma5, 2, w("aaa")}).size() == 108);
}

TEST_CASE("predicted counts") {
    const auto rows = predicted_counts(19);
    REQUIRE(rows.size() == 20);
    CHECK(rows[5] == PredictedCounts{5, 303, 119});
    CHECK(rows[6] == PredictedCounts{6, 490, 192});
    CHECK(rows[19] == PredictedCounts{19, 255'329, 103'664});
    for (std::size_t n = 1; n < rows.size(); ++n) {
        CHECK(rows[n].ell > rows[n - 1].ell);
        CHECK(rows[n].r > rows[n - 1].r);
    }
    CHECK(predicted_counts(4).size() == 5);
    CHECK_THROWS_AS(predicted_counts(3), std::invalid_argument);
    CHECK(concatenation_gain(5) == 3);
    CHECK(concatenation_gain(6) == 2);
}

TEST_CASE("symbol limit from the environment") {
    ::setenv("HPRUNS_MAX_SYMBOLS", "500", 1);
    CHECK(max_symbols() == 500);
    CHECK(fib_word(6).size() == 490);
    CHECK_THROWS_AS(fib_word(7), LengthLimitError);
    ::setenv("HPRUNS_MAX_SYMBOLS", "junk", 1);
    CHECK(max_symbols() == default_max_symbols);
    ::unsetenv("HPRUNS_MAX_SYMBOLS");
    CHECK(max_symbols() == default_max_symbols);
}
