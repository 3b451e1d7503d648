#include "doctest.h"

#include "hpruns/campaigns.hpp"
#include "hpruns/families.hpp"
#include "hpruns/report.hpp"
#include "hpruns/text_format.hpp"

using namespace hpruns;

namespace {

nlohmann::ordered_json without_elapsed(const VerifyReport& r) {
    auto j = to_json(r);
    j.erase("elapsed");
    return j;
}

}  // namespace

TEST_CASE("table campaign") {
    const VerifyReport r = verify_table1();
    CHECK(r.campaign == "table1");
    CHECK(r.cases.size() == 7);
    CHECK(r.all_pass);
    CHECK(r.cases[1].expected == "length=45 hp_runs=17");
    CHECK(r.cases[5].computed == "length=303 hp_runs=119");

    // the scan path reports the same counts
    for (const TableRow& row : fibonacci_table) {
        const auto j = scan_json(find_runs(fib_word(row.n)));
        CHECK(j["hp_run_count"] == row.r);
        CHECK(j["word_length"] == row.ell);
    }
}

TEST_CASE("recurrence campaign, small n") {
    const VerifyReport r = verify_recurrences(10);
    CHECK(r.all_pass);
    CHECK(r.cases.size() == 2 * 6);
    CHECK(r.cases[1].id == "n=5 hp_runs");
    CHECK(r.cases[1].note == "equality");
    CHECK(r.cases[3].note == "equality");
    CHECK_THROWS_AS(verify_recurrences(4), std::invalid_argument);
}

TEST_CASE("tripled doubling campaign") {
    const VerifyReport r = verify_lemma5(Word::from_letters("aaa"), 3);
    CHECK(r.all_pass);
    REQUIRE(r.cases.size() == 4);
    CHECK(r.cases[0].computed == "length=3 hp_runs=1 density=1/3");
    CHECK(r.cases[1].computed == "length=18 hp_runs=7 density=7/18");
    CHECK(r.cases[2].computed == "length=108 hp_runs=43 density=43/108");
    CHECK(r.cases[3].computed == "length=648 hp_runs=259 density=259/648");
    CHECK(r.cases[3].note == "equality");
    CHECK_THROWS_AS(verify_lemma5(Word::from_letters("aaa"), 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_lemma5(Word::from_letters("aaa"), 20), LengthLimitError);
}

TEST_CASE("exhaustive campaigns, small sizes") {
    const VerifyReport h = verify_handles(10, 2);
    CHECK(h.all_pass);
    CHECK(h.cases.size() == 10);
    const VerifyReport u = verify_upper_bound(12, 3);
    CHECK(u.all_pass);
    CHECK(u.cases[2].computed.find("witness=aaa") != std::string::npos);
    CHECK_THROWS_AS(verify_handles(0, 2), std::invalid_argument);
}

TEST_CASE("block structure and exponent campaigns") {
    const VerifyReport b = verify_block_structure();
    CHECK_MESSAGE(b.all_pass, to_text(b));
    const VerifyReport e = verify_fibonacci_exponent(12);
    CHECK(e.all_pass);
}

TEST_CASE("oracle campaign with a small sample") {
    OracleSweepOptions opts;
    opts.exhaustive_len = 8;
    opts.random_count = 200;
    opts.random_max_len = 40;
    const VerifyReport r = verify_oracle_equivalence(opts, Execution::serial);
    CHECK(r.all_pass);
    CHECK(r.cases.size() == 2);
}

TEST_CASE("reports are deterministic apart from elapsed time") {
    CHECK(without_elapsed(verify_table1()) == without_elapsed(verify_table1()));
    CHECK(without_elapsed(verify_upper_bound(11, 2, Execution::serial)) ==
          without_elapsed(verify_upper_bound(11, 2, Execution::parallel)));
}

TEST_CASE("JSON shapes") {
    const auto scan = scan_json(find_runs(Word::from_letters("aabaabaa")));
    CHECK(scan["run_count"] == 4);
    CHECK(scan["hp_run_count"] == 0);
    CHECK(scan["hp_density_num"] == 0);
    CHECK(scan["hp_density_den"] == 8);
    CHECK(scan["runs"][1] == nlohmann::ordered_json{{"start", 1}, {"end", 8}, {"period", 3}, {"length", 8}});

    const auto d = to_json(verify_disjointness(Word::from_letters("aaa")));
    CHECK(d.dump() ==
          R"({"word_length":3,"hp_run_count":1,"all_disjoint":true,"min_handle_count":2,"colliding_pair":null})");

    std::vector<HandleSet> sets{{{1, 3, 1}, {1, 2}, Word::from_letters("a"), Word::from_letters("a")},
                                {{2, 4, 1}, {2, 3}, Word::from_letters("a"), Word::from_letters("a")}};
    const auto c = to_json(check_disjointness(5, sets));
    CHECK(c["colliding_pair"].dump() ==
          R"([{"start":1,"end":3,"period":1},{"start":2,"end":4,"period":1}])");

    const auto f = to_json(exhaustive_frontier(3, 2));
    CHECK(f["max_hp_runs"] == 1);
    CHECK(f["witnesses"][0] == "aaa");

    const auto v = to_json(verify_lemma5(Word::from_letters("aaa"), 1));
    CHECK(v["campaign"] == "lemma5");
    CHECK(v["all_pass"] == true);
    CHECK(v["cases"][1]["note"] == "equality");
}

TEST_CASE("TSV scan report") {
    const std::string tsv = scan_tsv(find_runs(Word::from_letters("aabaabaa")));
    CHECK(tsv ==
          "start\tend\tperiod\texponent\n"
          "1\t2\t1\t2.0000\n"
          "1\t8\t3\t2.6667\n"
          "4\t5\t1\t2.0000\n"
          "7\t8\t1\t2.0000\n"
          "# word_length=8\n"
          "# run_count=4\n"
          "# hp_run_count=0\n"
          "# hp_density=0/8 (0.0000)\n");
}
