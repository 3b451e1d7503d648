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

// hpruns: runs / hp-runs scanner, word-family generator and verification campaigns.
//
// Exit codes: 0 all pass, 1 verification failure, 2 usage or input error,
// 3 budget exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hpruns/campaigns.hpp"
#include "hpruns/families.hpp"
#include "hpruns/handles.hpp"
#include "hpruns/report.hpp"
#include "hpruns/runs.hpp"
#include "hpruns/text_format.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

struct Output {
    std::string path;

    void emit(const std::string& text) const {
        std::cout << text;
        if (!path.empty()) {
            std::ofstream file(path);
            if (!file) {
                throw std::runtime_error("cannot open output file " + path);
            }
            file << text;
        }
    }
};

std::string json_text(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

int emit_report(const hpruns::VerifyReport& report, bool json, const Output& out) {
    out.emit(json ? json_text(hpruns::to_json(report)) : hpruns::to_text(report));
    return report.all_pass ? exit_ok : exit_failure;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace hpruns;

    CLI::App app{"Runs and highly periodic runs in words"};
    app.require_subcommand(1);
    Output out;
    bool json = false;
    bool serial = false;

    // scan
    auto* scan = app.add_subcommand("scan", "Report all runs and hp-runs of a word");
    std::string scan_word;
    std::string scan_file;
    bool scan_tsv_flag = false;
    auto* json_opt = scan->add_flag("--json", json, "JSON report");
    scan->add_flag("--tsv", scan_tsv_flag, "TSV report (default)")->excludes(json_opt);
    auto* word_opt = scan->add_option("word", scan_word, "Word in text format");
    scan->add_option("--file", scan_file, "File with one word per line")->excludes(word_opt);
    scan->add_option("--out", out.path, "Also write the report to PATH");

    // generate
    auto* gen = app.add_subcommand("generate", "Emit a word of one of the lower-bound families");
    std::string family;
    std::size_t gen_n = 0;
    std::string gen_base = "aaa";
    bool symbolic = false;
    gen->add_option("family", family, "fib | lemma5")->required()->check(CLI::IsMember({"fib", "lemma5"}));
    gen->add_option("--n", gen_n, "Step index")->required();
    gen->add_option("--base", gen_base, "Base word for lemma5 (default aaa)");
    gen->add_flag("--symbolic", symbolic, "fib only: emit the block sequence as letters A/B");
    gen->add_option("--out", out.path, "Also write the word to PATH");

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification campaign");
    verify->require_subcommand(1);
    verify->add_flag("--json", json, "JSON report");
    verify->add_flag("--serial", serial, "Run sweeps on one thread");
    verify->add_option("--out", out.path, "Also write the report to PATH");
    auto* v_table = verify->add_subcommand("table1", "Lengths and hp-run counts of f_0..f_6");
    auto* v_rec = verify->add_subcommand("recurrences", "Length and count recurrences of f_n");
    std::size_t max_n = 19;
    v_rec->add_option("--max-n", max_n, "Largest n")->required()->check(CLI::Range(5, 40));
    auto* v_l5 = verify->add_subcommand("lemma5", "Tripled-doubling family from a base word");
    std::size_t steps = 3;
    std::string l5_base = "aaa";
    v_l5->add_option("--steps", steps, "Number of steps")->required()->check(CLI::PositiveNumber);
    v_l5->add_option("--base", l5_base, "Base word (default aaa)");
    auto* v_handles = verify->add_subcommand("handles", "Exhaustive handle-mapping audit");
    auto* v_upper = verify->add_subcommand("upper-bound", "Exhaustive hp-runs <= (n-1)/2 check");
    std::size_t max_len = 0;
    std::size_t sigma = 2;
    for (auto* sub : {v_handles, v_upper}) {
        sub->add_option("--max-len", max_len, "Largest word length")->required()->check(CLI::Range(1, 64));
        sub->add_option("--sigma", sigma, "Alphabet size")->required()->check(CLI::Range(1, 26));
    }
    auto* v_blocks = verify->add_subcommand("blocks", "Structure of the alpha/beta blocks");
    auto* v_exp = verify->add_subcommand("exponent", "Run exponents of the symbolic Fibonacci words");
    std::size_t exp_n = 20;
    v_exp->add_option("--max-n", exp_n, "Largest n (default 20)")->check(CLI::Range(0, 30));
    auto* v_oracle = verify->add_subcommand("oracle", "Fast runs detector against the quadratic oracle");
    OracleSweepOptions oracle_opts;
    v_oracle->add_option("--max-len", oracle_opts.exhaustive_len, "Exhaustive binary length (default 14)");
    v_oracle->add_option("--random", oracle_opts.random_count, "Random words (default 10000)");

    // frontier
    auto* frontier = app.add_subcommand("frontier", "Exact maximum hp-run count over all words of a length");
    std::size_t f_len = 0;
    std::size_t f_sigma = 2;
    std::optional<double> budget;
    frontier->add_option("--len", f_len, "Word length")->required()->check(CLI::Range(1, 64));
    frontier->add_option("--sigma", f_sigma, "Alphabet size")->required()->check(CLI::Range(1, 26));
    frontier->add_option("--budget", budget, "Time budget in seconds")->check(CLI::PositiveNumber);
    frontier->add_flag("--json", json, "JSON report");
    frontier->add_flag("--serial", serial, "Run on one thread");
    frontier->add_option("--out", out.path, "Also write the report to PATH");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    const Execution execution = serial ? Execution::serial : Execution::parallel;
    try {
        if (*scan) {
            std::vector<Word> words;
            if (!scan_file.empty()) {
                std::ifstream in(scan_file);
                if (!in) {
                    std::cerr << "error: cannot open " << scan_file << '\n';
                    return exit_usage;
                }
                words = parse_words(in);
            } else if (!scan_word.empty()) {
                words.push_back(parse_word(scan_word));
            } else {
                std::cerr << "error: scan needs a word or --file PATH\n";
                return exit_usage;
            }
            std::string text;
            for (const Word& w : words) {
                const RunSet runs = find_runs(w);
                text += json ? scan_json(runs).dump() + "\n" : scan_tsv(runs);
            }
            out.emit(text);
            return exit_ok;
        }

        if (*gen) {
            if (family == "fib") {
                out.emit((symbolic ? render_symbolic(fib_symbolic(gen_n)) : render_word(fib_word(gen_n))) + "\n");
            } else {
                if (symbolic) {
                    std::cerr << "error: --symbolic applies to the fib family only\n";
                    return exit_usage;
                }
                out.emit(render_word(lemma5_word(parse_word(gen_base), gen_n), RenderStyle::integers) + "\n");
            }
            return exit_ok;
        }

        if (*verify) {
            if (*v_table) return emit_report(verify_table1(), json, out);
            if (*v_rec) return emit_report(verify_recurrences(max_n), json, out);
            if (*v_l5) return emit_report(verify_lemma5(parse_word(l5_base), steps), json, out);
            if (*v_handles) return emit_report(verify_handles(max_len, sigma, execution), json, out);
            if (*v_upper) return emit_report(verify_upper_bound(max_len, sigma, execution), json, out);
            if (*v_blocks) return emit_report(verify_block_structure(), json, out);
            if (*v_exp) return emit_report(verify_fibonacci_exponent(exp_n), json, out);
            if (*v_oracle) return emit_report(verify_oracle_equivalence(oracle_opts, execution), json, out);
        }

        if (*frontier) {
            std::optional<std::chrono::duration<double>> limit;
            if (budget) limit = std::chrono::duration<double>(*budget);
            const DensityFrontier f = exhaustive_frontier(f_len, f_sigma, execution, limit);
            out.emit(json ? json_text(to_json(f)) : to_text(f));
            if (!f.complete) return exit_budget;
            return within_upper_bound(f.max_hp_runs, f.length) ? exit_ok : exit_failure;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const LengthLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
