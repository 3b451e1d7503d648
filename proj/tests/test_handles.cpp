#include "doctest.h"

#include <set>

#include "hpruns/families.hpp"
#include "hpruns/handles.hpp"
#include "oracles.hpp"

using namespace hpruns;

namespace {

Word w(const char* letters) { return Word::from_letters(letters); }

// Independent handle construction: search for every occurrence of the extreme
// rotations anywhere inside the run and take the gap between each pair of
// back-to-back occurrences.
std::vector<std::size_t> handles_by_search(const oracle::Symbols& u, const Run& r) {
    const oracle::Symbols prefix(u.begin() + static_cast<std::ptrdiff_t>(r.start - 1),
                                 u.begin() + static_cast<std::ptrdiff_t>(r.start - 1 + r.period));
    const auto lo = oracle::min_rotation(prefix);
    const auto hi = oracle::max_rotation(prefix);
    std::set<std::size_t> out;
    if (lo == hi) {
        for (std::size_t i = r.start; i < r.end; ++i) out.insert(i);
        return {out.begin(), out.end()};
    }
    auto occurs_at = [&](const oracle::Symbols& x, std::size_t q) {  // 1-based q
        return q + x.size() - 1 <= r.end &&
               std::equal(x.begin(), x.end(), u.begin() + static_cast<std::ptrdiff_t>(q - 1));
    };
    for (const auto& x : {lo, hi}) {
        for (std::size_t q = r.start; q + 2 * x.size() - 1 <= r.end; ++q) {
            if (occurs_at(x, q) && occurs_at(x, q + x.size())) out.insert(q + x.size() - 1);
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace

TEST_CASE("handle set examples") {
    const HandleSet unary = handle_set(w("aaa"), {1, 3, 1});
    CHECK(unary.single_rotation_class());
    CHECK(unary.handles == std::vector<std::size_t>{1, 2});

    const HandleSet ab = handle_set(w("ababab"), {1, 6, 2});
    CHECK(ab.w_min == w("ab"));
    CHECK(ab.w_max == w("ba"));
    CHECK(ab.handles == std::vector<std::size_t>{2, 3, 4});
}

TEST_CASE("period-7 hp-run across the X|Y boundary has at least two handles") {
    const Word xyx = block_x().concat(block_y()).concat(block_x());
    bool found = false;
    for (const Run& r : hp_runs(xyx).runs) {
        if (r.period != 7) continue;
        found = true;
        const HandleSet hs = handle_set(xyx, r);
        CHECK(hs.handles.size() >= 2);
        CHECK(hs.handles == handles_by_search(oracle::symbols(xyx), r));
    }
    CHECK(found);
}

TEST_CASE("handle mapping rejects runs that are not hp-runs") {
    CHECK_THROWS_WITH_AS(handle_set(w("abab"), {1, 4, 2}), "handle mapping defined only for hp-runs",
                         std::invalid_argument);
    CHECK_THROWS_AS(handle_set(w("aaaa"), {1, 3, 1}), std::invalid_argument);  // not maximal
    CHECK_THROWS_AS(handle_set(w("aaaa"), {1, 4, 2}), std::invalid_argument);  // not shortest period
}

TEST_CASE("disjointness report") {
    const DisjointnessReport aaa = verify_disjointness(w("aaa"));
    CHECK(aaa.all_disjoint);
    CHECK(aaa.hp_run_count == 1);
    CHECK(aaa.min_handle_count == 2);
    CHECK_FALSE(aaa.colliding_pair);

    const DisjointnessReport none = verify_disjointness(w("ab"));
    CHECK(none.hp_run_count == 0);
    CHECK_FALSE(none.min_handle_count);

    const DisjointnessReport f2 = verify_disjointness(fib_word(2));
    CHECK(f2.word_length == 71);
    CHECK(f2.hp_run_count == 26);
    CHECK(f2.all_disjoint);
}

TEST_CASE("upper bound check") {
    CHECK(check_upper_bound(w("aaa")));
    CHECK(check_upper_bound(w("aaaa")));
    CHECK(check_upper_bound(w("a")));
    CHECK(within_upper_bound(1, 3));
    CHECK_FALSE(within_upper_bound(2, 4));
    CHECK(within_upper_bound(2, 5));
}

TEST_CASE("handle lemmas on every binary word up to length 12 and ternary up to 8") {
    for (const auto [max_len, sigma] : {std::pair<std::size_t, std::size_t>{12, 2}, {8, 3}}) {
        for (std::size_t n = 1; n <= max_len; ++n) {
            oracle::for_each_word(n, sigma, [&](const oracle::Symbols& s) {
                const Word word(s, sigma);
                const HandleAudit audit = audit_handles(word);
                REQUIRE_MESSAGE(!audit.violation, *audit.violation);
                REQUIRE(audit.disjointness.all_disjoint);
                for (const Run& r : hp_runs(word).runs) {
                    const HandleSet hs = handle_set(word, r);
                    REQUIRE(hs.handles == handles_by_search(s, r));
                    REQUIRE(oracle::is_prime(oracle::symbols(hs.w_min)));
                    REQUIRE(oracle::is_prime(oracle::symbols(hs.w_max)));
                    if (hs.single_rotation_class()) REQUIRE(hs.w_min.size() == 1);
                }
                REQUIRE(check_upper_bound(word));
            });
        }
    }
}

TEST_CASE("a planted collision is reported with its witness") {
    const Word word = w("aaaa");
    CHECK(verify_disjointness(word).min_handle_count == 3);

    // the detector never yields overlapping handle sets, so build them by hand
    std::vector<HandleSet> sets{{{1, 4, 1}, {1, 2, 3}, w("a"), w("a")},
                                {{2, 9, 2}, {4, 5}, w("ab"), w("ba")},
                                {{3, 9, 2}, {3, 6}, w("ab"), w("ba")}};
    const DisjointnessReport r = check_disjointness(10, sets);
    CHECK_FALSE(r.all_disjoint);
    CHECK(r.hp_run_count == 3);
    CHECK(r.min_handle_count == 2);
    REQUIRE(r.colliding_pair);
    CHECK(r.colliding_pair->first == Run{1, 4, 1});
    CHECK(r.colliding_pair->second == Run{3, 9, 2});
}

TEST_CASE("family words keep handle sets disjoint") {
    for (std::size_t n = 0; n <= 7; ++n) {
        const HandleAudit audit = audit_handles(fib_word(n));
        CHECK_MESSAGE(!audit.violation, "f_" << n);
    }
    for (std::size_t k = 0; k <= 3; ++k) {
        const HandleAudit audit = audit_handles(lemma5_word(w("aaa"), k));
        CHECK_MESSAGE(!audit.violation, "s_" << k);
    }
}
