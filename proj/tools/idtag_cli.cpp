/*
   Copyright 2026 The idtag authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.

   v0.1.0
*/

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <idtag/idtag.hpp>

namespace {

using namespace idtag;

Field field_for(u64 p, unsigned m) { return m == 1 ? make_prime_field(p) : make_extension_field(p, m); }

// whitespace-separated element strings, each "c0,c1,..." or "a^e"
Message parse_message(const Field& field, const std::string& text) {
    Message msg;
    std::istringstream in(text);
    std::string token;
    while (in >> token) msg.push_back(parse_element(field, token));
    if (msg.empty()) throw std::invalid_argument("message must contain at least one element");
    return msg;
}

std::string modulus_to_string(const std::vector<u64>& coeffs) {
    std::string out;
    for (u64 i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0 || coeffs[i] != 1) out += std::to_string(coeffs[i]);
        if (i == 1) out += "x";
        if (i > 1) out += "x^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

std::string trend_to_string(Trend trend) {
    switch (trend) {
    case Trend::Increasing: return "increasing";
    case Trend::Decreasing: return "decreasing";
    case Trend::Flat: return "flat";
    case Trend::Mixed: return "mixed";
    }
    return "?";
}

Figure parse_figure(const std::string& name) {
    if (name == "tradeoff") return Figure::Tradeoff;
    if (name == "identities-vs-time") return Figure::IdentitiesVsTime;
    if (name == "lambda2-vs-params") return Figure::Lambda2VsParams;
    if (name == "fixed-randomness") return Figure::FixedRandomness;
    throw std::invalid_argument("unknown figure \"" + name +
                                "\" (expected tradeoff, identities-vs-time, lambda2-vs-params or fixed-randomness)");
}

// append `row` to the CSV at `path`, writing `header` first when the file is
// new or empty
void append_csv(const std::string& path, const std::string& header, const std::string& row) {
    bool need_header = true;
    {
        std::ifstream probe(path);
        need_header = !probe.good() || probe.peek() == std::ifstream::traits_type::eof();
    }
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::invalid_argument("cannot open CSV file " + path);
    if (need_header) out << header << '\n';
    out << row << '\n';
}

struct IdentityChoice {
    CLI::Option* from_integer = nullptr;
    CLI::Option* from_seed = nullptr;
    CLI::Option* from_file = nullptr;
    std::string integer_text;
    u64 seed = 0;
    std::string file;

    void add_to(CLI::App* cmd) {
        from_integer = cmd->add_option("--identity-int", integer_text,
                                       "identity as a decimal integer (desk scale, < 2^128)");
        from_seed = cmd->add_option("--seed", seed, "identity drawn uniformly from a 64-bit seed");
        from_file = cmd->add_option("--identity-file", file, "identity file (header \"q k delta\", then indices)");
    }

    Identity resolve(const ConcatCode& code) const {
        const int given = (from_integer->count() > 0) + (from_seed->count() > 0) + (from_file->count() > 0);
        if (given != 1)
            throw std::invalid_argument("provide exactly one of --identity-int, --seed, --identity-file");
        if (from_integer->count() > 0) {
            u128 value = 0;
            try {
                value = parse_u128(integer_text);
            } catch (const std::out_of_range&) {
                throw IntegerTooLarge("identity integer exceeds 128 bits; draw large identities with --seed");
            }
            return code.identity_from_integer(value);
        }
        if (from_seed->count() > 0) return code.identity_from_seed(seed);
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open identity file " + file);
        const IdentityFileContents contents = read_identity_file(in);
        if (contents.q != code.q() || contents.k != code.k() || contents.delta != code.delta())
            throw std::invalid_argument("identity file is for (" + std::to_string(contents.q) + ", " +
                                        std::to_string(contents.k) + ", " + std::to_string(contents.delta) +
                                        "), not the requested parameters");
        return identity_from_indices(code, contents.coefficient_indices);
    }
};

void print_params_text(const ConcatCode& code) {
    const IdentityCount count = code.identity_count();
    const Rational bound = code.false_id_bound();
    std::cout << "(q, k, delta)   = (" << code.q() << ", " << code.k() << ", " << code.delta() << ")\n";
    std::cout << "derived code    = [" << to_string(code.block_length()) << ", " << to_string(code.dimension())
              << ", " << to_string(code.distance()) << "]_" << code.q() << '\n';
    std::cout << "identities      = " << to_string(count.base) << "^" << to_string(count.exponent)
              << "  (log10 = " << detail::csv_log10(count.log10_value) << ")\n";
    std::cout << "identity length = " << to_string(code.identity_length()) << " outer coefficients\n";
    std::cout << "lambda2 bound   = " << bound.str() << " = " << detail::csv_lambda2(bound.value()) << '\n';
    std::cout << "inner field     = GF(" << code.q() << ")\n";
    std::cout << "outer field     = GF(" << code.q() << "^" << code.k() << "), modulus "
              << modulus_to_string(code.outer_field().modulus()) << '\n';
    if (code.scaling_warning())
        std::cout << "warning: k/q > 1/2, far from the q >> k >> delta scaling regime\n";
}

void print_params_json(const ConcatCode& code) {
    const IdentityCount count = code.identity_count();
    const Rational bound = code.false_id_bound();
    const nlohmann::json j{
        {"q", code.q()},
        {"k", code.k()},
        {"delta", code.delta()},
        {"block_length", to_string(code.block_length())},
        {"dimension", to_string(code.dimension())},
        {"distance", to_string(code.distance())},
        {"identity_length", to_string(code.identity_length())},
        {"identities",
         {{"base", to_string(count.base)}, {"exponent", to_string(count.exponent)}, {"log10", count.log10_value}}},
        {"lambda2_bound", {{"num", to_string(bound.num)}, {"den", to_string(bound.den)}, {"value", bound.value()}}},
        {"scaling_warning", code.scaling_warning()},
        {"inner_field", field_to_json(code.inner_field())},
        {"outer_field", field_to_json(code.outer_field())},
    };
    std::cout << j.dump(2) << '\n';
}

void print_capacity_report(const CapacityReport& report) {
    const struct {
        const char* name;
        const ConditionReport& condition;
    } rows[] = {
        {"log k / log M -> 1 (size)", report.size_condition},
        {"log q / log M -> 0 (alphabet)", report.alphabet_condition},
        {"d / M         -> 1 (distance)", report.distance_condition},
    };
    for (const auto& row : rows) {
        std::cout << row.name << ": trend " << trend_to_string(row.condition.trend) << ", "
                  << (row.condition.approaching ? "approaching" : "not approaching") << ", ratios";
        for (double r : row.condition.ratios) std::cout << ' ' << detail::csv_double(r);
        std::cout << '\n';
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"identification codes from concatenated Reed-Solomon codes"};
    app.require_subcommand(1);

    /* rs: single-level Reed-Solomon codes */

    CLI::App* rs = app.add_subcommand("rs", "single Reed-Solomon code operations");
    rs->require_subcommand(1);
    u64 rs_p = 0, rs_n = 0, rs_k = 0;
    unsigned rs_m = 1;
    std::string rs_msg, rs_j;
    auto add_rs_field = [&](CLI::App* cmd, bool with_msg) {
        cmd->add_option("--p", rs_p, "field characteristic (prime)")->required();
        cmd->add_option("--m", rs_m, "extension degree")->capture_default_str();
        cmd->add_option("--n", rs_n, "blocklength (locators used)")->required();
        cmd->add_option("--k", rs_k, "message length")->required();
        if (with_msg)
            cmd->add_option("--msg", rs_msg, "message: space-separated elements \"c0,c1,...\" or \"a^e\"")
                ->required();
    };

    CLI::App* rs_eval = rs->add_subcommand("eval", "evaluate one codeword position");
    add_rs_field(rs_eval, true);
    rs_eval->add_option("--j", rs_j, "locator index")->required();
    rs_eval->callback([&] {
        const Field field = field_for(rs_p, rs_m);
        const RsCode code(field, rs_n, rs_k);
        std::cout << element_to_string(field, code.evaluate_tag(parse_message(field, rs_msg), parse_u128(rs_j)))
                  << '\n';
    });

    CLI::App* rs_codeword = rs->add_subcommand("codeword", "materialize a full codeword (desk scale)");
    add_rs_field(rs_codeword, true);
    rs_codeword->callback([&] {
        const Field field = field_for(rs_p, rs_m);
        const RsCode code(field, rs_n, rs_k);
        const auto word = code.codeword(parse_message(field, rs_msg));
        for (u64 j = 0; j < word.size(); ++j)
            std::cout << element_to_string(field, word[j]) << (j + 1 < word.size() ? ' ' : '\n');
    });

    CLI::App* rs_genmatrix = rs->add_subcommand("genmatrix", "print the k x n generator matrix (desk scale)");
    add_rs_field(rs_genmatrix, false);
    rs_genmatrix->callback([&] {
        const Field field = field_for(rs_p, rs_m);
        const auto rows = RsCode(field, rs_n, rs_k).generator_matrix();
        for (const auto& row : rows) {
            for (u64 j = 0; j < row.size(); ++j)
                std::cout << element_to_string(field, row[j]) << (j + 1 < row.size() ? ' ' : '\n');
        }
    });

    CLI::App* rs_mindist = rs->add_subcommand("mindist", "exhaustive minimum distance (desk scale)");
    add_rs_field(rs_mindist, false);
    rs_mindist->callback([&] {
        const Field field = field_for(rs_p, rs_m);
        std::cout << RsCode(field, rs_n, rs_k).min_distance_bruteforce() << '\n';
    });

    /* id: concatenated identification codes */

    CLI::App* id = app.add_subcommand("id", "concatenated identification code operations");
    id->require_subcommand(1);
    u64 id_q = 0;
    unsigned id_k = 0, id_delta = 0;
    auto add_id_params = [&](CLI::App* cmd) {
        cmd->add_option("--q", id_q, "alphabet size (prime)")->required();
        cmd->add_option("--k", id_k, "inner message length")->required();
        cmd->add_option("--delta", id_delta, "rate-deficiency parameter")->required();
    };

    CLI::App* id_params = id->add_subcommand("params", "derive [n_c, k_c, d_c]_q and the identity count");
    add_id_params(id_params);
    bool id_params_json = false;
    id_params->add_flag("--json", id_params_json, "emit JSON instead of text");
    id_params->callback([&] {
        const ConcatCode code(id_q, id_k, id_delta);
        if (id_params_json)
            print_params_json(code);
        else
            print_params_text(code);
    });

    CLI::App* id_tag = id->add_subcommand("tag", "compute one tag T_i(j) on demand");
    add_id_params(id_tag);
    IdentityChoice id_tag_identity;
    id_tag_identity.add_to(id_tag);
    std::string id_tag_j;
    id_tag->add_option("--j", id_tag_j, "randomness (position in [0, q^(k+1)))")->required();
    id_tag->callback([&] {
        const ConcatCode code(id_q, id_k, id_delta);
        const Identity identity = id_tag_identity.resolve(code);
        std::cout << code.tag(identity, parse_u128(id_tag_j)).coefficients[0] << '\n';
    });

    CLI::App* id_codeword = id->add_subcommand("codeword", "materialize a full tagging function (desk scale)");
    add_id_params(id_codeword);
    IdentityChoice id_codeword_identity;
    id_codeword_identity.add_to(id_codeword);
    id_codeword->callback([&] {
        const ConcatCode code(id_q, id_k, id_delta);
        const Identity identity = id_codeword_identity.resolve(code);
        if (code.block_length() > code.materialization_cap)
            throw MaterializationTooLarge("codeword of " + to_string(code.block_length()) +
                                          " symbols exceeds the materialization cap");
        const u64 n = static_cast<u64>(code.block_length());
        for (u64 j = 0; j < n; ++j)
            std::cout << code.tag(identity, j).coefficients[0] << (j + 1 < n ? ' ' : '\n');
    });

    CLI::App* id_capacity = id->add_subcommand("check-capacity", "capacity-condition trends over a family");
    std::string id_capacity_qlist, id_capacity_family = "double";
    unsigned id_capacity_k = 3, id_capacity_delta = 2;
    id_capacity->add_option("--q-list", id_capacity_qlist, "comma-separated alphabet sizes")->required();
    id_capacity->add_option("--family", id_capacity_family, "family: double (concatenated) or single (plain RS)")
        ->capture_default_str();
    id_capacity->add_option("--k", id_capacity_k, "inner message length")->capture_default_str();
    id_capacity->add_option("--delta", id_capacity_delta, "rate-deficiency parameter (double family)")->capture_default_str();
    id_capacity->callback([&] {
        std::vector<CodePoint> points;
        std::istringstream in(id_capacity_qlist);
        std::string token;
        while (std::getline(in, token, ','))
            points.push_back(id_capacity_family == "single"
                                 ? single_rs_point(static_cast<u64>(parse_u128(token)), id_capacity_k)
                                 : code_point(ConcatCode(static_cast<u64>(parse_u128(token)), id_capacity_k,
                                                         id_capacity_delta)));
        if (id_capacity_family != "single" && id_capacity_family != "double")
            throw std::invalid_argument("--family must be single or double");
        print_capacity_report(capacity_conditions(points));
    });

    /* sim: Monte Carlo false-identification experiments */

    CLI::App* sim = app.add_subcommand("sim", "Monte Carlo false-identification experiments");
    sim->require_subcommand(1);
    u64 sim_trials = 1000, sim_seed = 42;
    std::string sim_csv;
    auto add_sim_options = [&](CLI::App* cmd) {
        add_id_params(cmd);
        cmd->add_option("--trials", sim_trials, "number of trials")->capture_default_str();
        cmd->add_option("--seed", sim_seed, "root seed of the experiment stream")->capture_default_str();
        cmd->add_option("--csv", sim_csv, "append one CSV row to this file");
    };
    auto run_sim = [&](ExperimentMode mode) {
        const ConcatCode code(id_q, id_k, id_delta);
        const FaExperimentReport report = mode == ExperimentMode::FixedRandomness
                                              ? run_fixed_randomness_experiment(code, sim_trials, sim_seed)
                                              : run_average_fa_experiment(code, sim_trials, sim_seed);
        std::cout << fa_report_to_json(report).dump(2) << '\n';
        if (!sim_csv.empty()) append_csv(sim_csv, sim_csv_header(), sim_csv_row(report));
    };

    CLI::App* sim_fixed = sim->add_subcommand("fixed", "one sender and position, many wrong verifiers");
    add_sim_options(sim_fixed);
    sim_fixed->callback([&] { run_sim(ExperimentMode::FixedRandomness); });

    CLI::App* sim_average = sim->add_subcommand("average", "fresh sender, verifier and position per trial");
    add_sim_options(sim_average);
    sim_average->callback([&] { run_sim(ExperimentMode::Average); });

    /* bench: wall-clock timing */

    CLI::App* bench = app.add_subcommand("bench", "wall-clock benchmarks");
    bench->require_subcommand(1);
    CLI::App* bench_tag_cmd = bench->add_subcommand("tag", "median time of the full one-tag pipeline");
    add_id_params(bench_tag_cmd);
    unsigned bench_reps = 5;
    u64 bench_seed = 42;
    std::string bench_csv;
    bench_tag_cmd->add_option("--reps", bench_reps, "timed repetitions (one untimed warm-up precedes)")->capture_default_str();
    bench_tag_cmd->add_option("--seed", bench_seed, "root seed for identities and positions")->capture_default_str();
    bench_tag_cmd->add_option("--csv", bench_csv, "append one CSV row to this file");
    bench_tag_cmd->callback([&] {
        const BenchRecord record = bench_tag(id_q, id_k, id_delta, bench_reps, bench_seed);
        std::cout << bench_record_to_json(record).dump(2) << '\n';
        if (!bench_csv.empty()) append_csv(bench_csv, bench_csv_header(), bench_csv_row(record));
    });

    /* fig: CSV data behind the standard figures */

    CLI::App* fig = app.add_subcommand("fig", "figure data emission");
    fig->require_subcommand(1);
    CLI::App* fig_emit = fig->add_subcommand("emit", "write one figure's CSV data");
    std::string fig_name, fig_out = "-", fig_qlist;
    FigureOptions fig_options;
    fig_emit
        ->add_option("--figure", fig_name,
                     "figure: tradeoff, identities-vs-time, lambda2-vs-params, fixed-randomness")
        ->required();
    fig_emit->add_option("--out", fig_out, "output file, - for stdout")->capture_default_str();
    fig_emit->add_option("--q-list", fig_qlist, "comma-separated alphabet sizes (default per figure)");
    fig_emit->add_option("--k", fig_options.k, "inner message length")->capture_default_str();
    fig_emit->add_option("--delta", fig_options.delta, "rate-deficiency parameter")->capture_default_str();
    fig_emit->add_option("--trials", fig_options.trials, "trials per point (fixed-randomness)")->capture_default_str();
    fig_emit->add_option("--seed", fig_options.seed, "root seed")->capture_default_str();
    fig_emit->add_option("--reps", fig_options.repetitions, "timed repetitions per point")->capture_default_str();
    fig_emit->callback([&] {
        const Figure figure = parse_figure(fig_name);
        if (!fig_qlist.empty()) {
            std::istringstream in(fig_qlist);
            std::string token;
            while (std::getline(in, token, ','))
                fig_options.q_list.push_back(static_cast<u64>(parse_u128(token)));
        }
        if (fig_out == "-") {
            emit_figure_data(figure, fig_options, std::cout);
        } else {
            std::ofstream out(fig_out);
            if (!out) throw std::invalid_argument("cannot open output file " + fig_out);
            emit_figure_data(figure, fig_options, out);
        }
    });

    /* util */

    CLI::App* util = app.add_subcommand("util", "small utilities");
    util->require_subcommand(1);
    CLI::App* util_nearest = util->add_subcommand("nearest-prime", "prime nearest to N (ties go down)");
    u64 util_n = 0;
    util_nearest->add_option("N", util_n, "target integer")->required();
    util_nearest->callback([&] { std::cout << nearest_prime(util_n) << '\n'; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
