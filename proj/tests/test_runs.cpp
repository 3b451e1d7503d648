#include "doctest.h"

#include <random>

#include "hpruns/families.hpp"
#include "hpruns/lce.hpp"
#include "hpruns/runs.hpp"
#include "oracles.hpp"

using namespace hpruns;

namespace {

Word w(const char* letters) { return Word::from_letters(letters); }

std::vector<oracle::RunTuple> tuples(const RunSet& rs) {
    std::vector<oracle::RunTuple> out;
    for (const Run& r : rs.runs) out.emplace_back(r.start, r.end, r.period);
    return out;
}

}  // namespace

TEST_CASE("oracle examples") {
    CHECK(find_runs_oracle(w("aaa")).runs == std::vector<Run>{{1, 3, 1}});
    CHECK(find_runs_oracle(w("abab")).runs == std::vector<Run>{{1, 4, 2}});
    CHECK(find_runs_oracle(w("aabaabaa")).runs == std::vector<Run>{{1, 2, 1}, {1, 8, 3}, {4, 5, 1}, {7, 8, 1}});
    CHECK(tuples(find_runs_oracle(w("aabaabaa"))) == oracle::runs_by_interval_scan(oracle::symbols(w("aabaabaa"))));
}

TEST_CASE("fast detector examples") {
    CHECK(find_runs(w("aaa")).runs == std::vector<Run>{{1, 3, 1}});
    CHECK(find_runs(w("abab")).runs == std::vector<Run>{{1, 4, 2}});
    CHECK(find_runs(w("aabaabaa")) == find_runs_oracle(w("aabaabaa")));
    CHECK(find_runs(w("ab")).runs.empty());
    CHECK(find_runs(w("a")).runs.empty());
    CHECK(hp_runs(alpha()).size() == 9);
    CHECK_THROWS_AS(find_runs(Word{}), std::invalid_argument);
    CHECK_THROWS_AS(find_runs_oracle(Word{}), std::invalid_argument);
}

TEST_CASE("hp-runs and density") {
    CHECK(hp_runs(w("aaaa")).runs == std::vector<Run>{{1, 4, 1}});
    CHECK(hp_runs(w("aabaabaa")).runs.empty());
    CHECK(hp_runs(w("aaa")).size() == 1);
    CHECK(hp_density(w("aaa")) == Density{1, 3});
    CHECK(hp_density(alpha()) == Density{9, 26});
    CHECK(hp_density(w("ab")) == Density{0, 2});
    CHECK(hp_density(w("ab")).str() == "0/2");
    CHECK(Density{7, 18} > Density{1, 3});
    CHECK(Density{2, 6} == Density{2, 6});
}

TEST_CASE("quadratic oracle agrees with the interval-scan definition, all binary words up to 10") {
    for (std::size_t n = 1; n <= 10; ++n) {
        oracle::for_each_word(n, 2, [&](const oracle::Symbols& s) {
            REQUIRE(tuples(find_runs_oracle(Word(s, 2))) == oracle::runs_by_interval_scan(s));
        });
    }
    for (std::size_t n = 1; n <= 6; ++n) {
        oracle::for_each_word(n, 3, [&](const oracle::Symbols& s) {
            REQUIRE(tuples(find_runs_oracle(Word(s, 3))) == oracle::runs_by_interval_scan(s));
        });
    }
}

TEST_CASE("fast detector equals oracle on every binary word up to length 14") {
    for (std::size_t n = 1; n <= 14; ++n) {
        oracle::for_each_word(n, 2, [&](const oracle::Symbols& s) {
            const Word word(s, 2);
            REQUIRE(find_runs(word) == find_runs_oracle(word));
        });
    }
}

TEST_CASE("fast detector equals oracle on random ternary words") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::size_t> len(1, 14);
    for (int k = 0; k < 20000; ++k) {
        const Word word = oracle::random_word(rng, len(rng), 3);
        REQUIRE(find_runs(word) == find_runs_oracle(word));
    }
}

TEST_CASE("run invariants hold for every reported run") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> len(1, 120);
    for (int k = 0; k < 1000; ++k) {
        const std::size_t sigma = 1 + static_cast<std::size_t>(k % 3);
        const Word word = oracle::random_word(rng, len(rng), sigma);
        const RunSet all = find_runs(word);
        for (const Run& r : all.runs) {
            CHECK_MESSAGE(!run_violation(word, r), "run (" << r.start << "," << r.end << "," << r.period << ")");
        }
        const RunSet hp = hp_runs(all);
        for (const Run& r : all.runs) {
            const bool member = std::find(hp.runs.begin(), hp.runs.end(), r) != hp.runs.end();
            CHECK(member == (3 * r.period <= r.length()));
        }
        CHECK(hp.size() <= all.size());
        // red flag only: no word is known to exceed 1.029 n runs
        CHECK(100 * all.size() <= 103 * word.size());
    }
}

TEST_CASE("run_violation spots broken runs") {
    const Word word = w("aabaabaa");
    CHECK_FALSE(run_violation(word, {1, 8, 3}));
    CHECK(run_violation(word, {1, 8, 6}).value() == "not the shortest period");
    CHECK(run_violation(word, {2, 8, 3}).value() == "extends to the left");
    CHECK(run_violation(word, {1, 7, 3}).value() == "extends to the right");
    CHECK(run_violation(word, {1, 9, 3}).value() == "bounds");
    CHECK(run_violation(w("abcab"), {1, 5, 3}).value() == "exponent below 2");
}

TEST_CASE("suffix array and LCE against naive computation") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> len(1, 80);
    for (int k = 0; k < 300; ++k) {
        const Word word = oracle::random_word(rng, len(rng), 1 + static_cast<std::size_t>(k % 4));
        const auto s = oracle::symbols(word);
        const auto n = static_cast<std::uint32_t>(s.size());
        std::vector<std::uint32_t> expected(n);
        std::iota(expected.begin(), expected.end(), 0u);
        std::sort(expected.begin(), expected.end(), [&](std::uint32_t a, std::uint32_t b) {
            return std::lexicographical_compare(s.begin() + a, s.end(), s.begin() + b, s.end());
        });
        REQUIRE(suffix_array(s) == expected);

        const LceIndex index(s);
        for (std::uint32_t i = 0; i < n; ++i) {
            for (std::uint32_t j = 0; j < n; ++j) {
                std::uint32_t l = 0;
                while (i + l < n && j + l < n && s[i + l] == s[j + l]) ++l;
                REQUIRE(index.lce(i, j) == l);
            }
        }
    }
}

TEST_CASE("large alphabets and long unary words") {
    const Word unary = Word::from_letters("a").power(1000);
    CHECK(find_runs(unary).runs == std::vector<Run>{{1, 1000, 1}});
    const Word spread({5, 900, 5, 900, 5, 900, 7}, 901);
    CHECK(find_runs(spread) == find_runs_oracle(spread));
    CHECK(hp_runs(spread).runs == std::vector<Run>{{1, 6, 2}});
}
