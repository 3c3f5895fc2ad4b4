// Command-line surface: combine, matchup, rank, compare, verify-axioms,
// cycle-demo, role-update. Text output by default, --output json for the
// machine-readable form. Exit code 0 on success, nonzero on any error or
// failed verification.

#include <charconv>
#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "multielo/multielo.hpp"

namespace {

using namespace multielo;

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) {
            end = text.size();
        }
        std::string field = detail::trim(text.substr(start, end - start));
        double value = 0.0;
        const char* first = field.data();
        const char* last = first + field.size();
        const auto res = std::from_chars(first, last, value);
        if (res.ec != std::errc{} || res.ptr != last || field.empty()) {
            throw InvalidInputError("invalid number in list: '" + field + "'");
        }
        values.push_back(value);
        start = end + 1;
    }
    return values;
}

std::vector<std::string> parse_label_list(const std::string& text) {
    std::vector<std::string> labels;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) {
            end = text.size();
        }
        labels.push_back(detail::trim(text.substr(start, end - start)));
        start = end + 1;
    }
    return labels;
}

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = "format" + std::to_string(i + 1);
    }
    return labels;
}

std::vector<double> resolve_pi(const std::string& spec, std::size_t n) {
    if (spec == "uniform") {
        return std::vector<double>(n, 1.0 / static_cast<double>(n));
    }
    return parse_double_list(spec);
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

struct CombineOptions {
    std::vector<double> ratings;
    std::string input;
    std::string format = "auto";
    std::string weights;
    std::string output = "text";
};

int run_combine(const CombineOptions& options) {
    std::vector<double> weights;
    if (!options.weights.empty()) {
        weights = parse_double_list(options.weights);
    }
    if (!options.ratings.empty()) {
        const double combined =
            weights.empty() ? combined_rating(options.ratings)
                            : combined_rating(options.ratings, weights);
        if (options.output == "json") {
            ordered_json doc;
            doc["ratings"] = options.ratings;
            doc["weights"] = weights.empty()
                                 ? std::vector<double>(options.ratings.size(), 1.0)
                                 : weights;
            doc["combined"] = combined;
            emit(doc);
        } else {
            std::cout << "combined rating: " << format_fixed(combined, 2) << '\n';
        }
        return 0;
    }
    if (options.input.empty()) {
        throw InvalidInputError("combine needs ratings or --input FILE");
    }
    const auto table = load_ratings_file(options.input, options.format);
    const auto board = rank_players(table, weights);
    if (options.output == "json") {
        emit(to_json(board));
    } else {
        render_leaderboard(board, std::cout);
    }
    return 0;
}

// ---------------------------------------------------------------------------

struct MatchupOptions {
    std::string input;
    std::string format = "auto";
    std::string a;
    std::string b;
    std::string ratings_a;
    std::string ratings_b;
    std::string formats;
    std::string weights;
    std::string pi;
    std::string output = "text";
};

int run_matchup(const MatchupOptions& options) {
    std::vector<double> weights;
    if (!options.weights.empty()) {
        weights = parse_double_list(options.weights);
    }
    NamedMatchup matchup;
    if (!options.input.empty()) {
        if (options.a.empty() || options.b.empty()) {
            throw InvalidInputError("matchup from a file needs --a and --b names");
        }
        const auto table = load_ratings_file(options.input, options.format);
        std::vector<double> pi;
        if (!options.pi.empty()) {
            pi = resolve_pi(options.pi, table.formats.size());
        }
        matchup = matchup_report(table, options.a, options.b, weights, pi);
    } else {
        if (options.ratings_a.empty() || options.ratings_b.empty()) {
            throw InvalidInputError(
                "matchup needs --input with --a/--b, or --ratings-a/--ratings-b");
        }
        const auto ra = parse_double_list(options.ratings_a);
        const auto rb = parse_double_list(options.ratings_b);
        if (ra.size() != rb.size()) {
            throw DimensionError("--ratings-a and --ratings-b must have the same "
                                 "number of entries");
        }
        const auto labels = options.formats.empty()
                                ? default_labels(ra.size())
                                : parse_label_list(options.formats);
        std::vector<double> pi;
        if (!options.pi.empty()) {
            pi = resolve_pi(options.pi, ra.size());
        }
        matchup.name_a = options.a.empty() ? "A" : options.a;
        matchup.name_b = options.b.empty() ? "B" : options.b;
        matchup.report = compute_matchup(RatingProfile{labels, ra},
                                         RatingProfile{labels, rb}, weights, pi);
    }
    if (options.output == "json") {
        emit(to_json(matchup));
    } else {
        render_matchup(matchup, std::cout);
    }
    return 0;
}

// ---------------------------------------------------------------------------

struct TableOptions {
    std::string input;
    std::string format = "auto";
    std::string weights;
    std::string p_list = "0,1";
    std::string output = "text";
};

int run_rank(const TableOptions& options) {
    const auto table = load_ratings_file(options.input, options.format);
    std::vector<double> weights;
    if (!options.weights.empty()) {
        weights = parse_double_list(options.weights);
    }
    const auto board = rank_players(table, weights);
    if (options.output == "json") {
        emit(to_json(board));
    } else {
        render_leaderboard(board, std::cout);
    }
    return 0;
}

int run_compare(const TableOptions& options) {
    const auto table = load_ratings_file(options.input, options.format);
    std::vector<double> weights;
    if (!options.weights.empty()) {
        weights = parse_double_list(options.weights);
    }
    const auto p_values = parse_double_list(options.p_list);
    const auto comparison = compare_methods(table, weights, p_values);
    if (options.output == "json") {
        emit(to_json(comparison));
    } else {
        render_comparison(comparison, std::cout);
    }
    return 0;
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
    std::string rule = "all";
    double eta = 1.0;
    double p = 2.0;
    std::uint64_t seed = 1729;
    int samples = 1000;
    std::string output = "text";
};

int run_verify(const VerifyOptions& options) {
    SampleSpec spec;
    spec.seed = options.seed;
    spec.samples = options.samples;
    std::vector<AggregationRule> rules;
    if (options.rule == "all") {
        rules = {main_rule(), arithmetic_rule(), piecewise_rule(),
                 entropy_rule(options.eta)};
    } else if (options.rule == "main") {
        rules = {main_rule()};
    } else if (options.rule == "arithmetic") {
        rules = {arithmetic_rule()};
    } else if (options.rule == "piecewise") {
        rules = {piecewise_rule()};
    } else if (options.rule == "entropy") {
        rules = {entropy_rule(options.eta)};
    } else if (options.rule == "power-mean") {
        rules = {power_mean_rule(options.p)};
    } else {
        throw InvalidInputError("unknown rule: " + options.rule);
    }
    bool all_expected = true;
    ordered_json doc = ordered_json::array();
    for (const auto& rule : rules) {
        const auto report = check_axioms(rule, spec);
        const auto expected = expected_axiom_pattern(rule);
        const bool matches = report.normalization.holds == expected[0] &&
                             report.recursion.holds == expected[1] &&
                             report.marginal.holds == expected[2] &&
                             report.relabeling.holds && report.weight_scale.holds;
        all_expected = all_expected && matches;
        if (options.output == "json") {
            auto entry = to_json(report);
            entry["verdicts_match_expected"] = matches;
            doc.push_back(std::move(entry));
        } else {
            render_axiom_report(report, std::cout);
            std::cout << "  verdicts match the expected pattern: "
                      << (matches ? "yes" : "NO") << '\n';
        }
    }
    if (options.output == "json") {
        ordered_json wrapper;
        wrapper["rules"] = std::move(doc);
        wrapper["all_verdicts_match"] = all_expected;
        emit(wrapper);
    } else {
        std::cout << (all_expected ? "verification passed"
                                   : "verification FAILED")
                  << '\n';
    }
    return all_expected ? 0 : 1;
}

// ---------------------------------------------------------------------------

int run_cycle(const std::string& output) {
    const auto report = verify_cycle();
    bool ok = report.cyclic() && report.combined_spread() <= 1e-9;
    for (double lottery : report.lottery) {
        ok = ok && std::abs(lottery - 677.0 / 1111.0) <= 1e-12;
    }
    if (output == "json") {
        auto doc = to_json(report);
        doc["verified"] = ok;
        emit(doc);
    } else {
        render_cycle(report, std::cout);
        std::cout << (ok ? "cycle verified" : "cycle verification FAILED") << '\n';
    }
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct RoleUpdateOptions {
    std::string roles = "white,black";
    std::string ratings_a;
    std::string ratings_b;
    std::string role_a;
    std::string role_b;
    double score = 0.5;
    double k = kDefaultKFactor;
    std::string weights;
    std::string output = "text";
};

int run_role_update(const RoleUpdateOptions& options) {
    const auto labels = parse_label_list(options.roles);
    const RatingProfile a{labels, parse_double_list(options.ratings_a)};
    const RatingProfile b{labels, parse_double_list(options.ratings_b)};
    std::vector<double> weights;
    if (!options.weights.empty()) {
        weights = parse_double_list(options.weights);
    }
    const double expected =
        role_expected_score(a, b, options.role_a, options.role_b);
    const auto [ua, ub] =
        role_update(a, b, options.role_a, options.role_b, options.score, options.k);
    if (options.output == "json") {
        ordered_json doc;
        doc["roles"] = labels;
        doc["expected_score"] = expected;
        doc["score"] = options.score;
        doc["k"] = options.k;
        doc["a_before"] = a.ratings;
        doc["a_after"] = ua.ratings;
        doc["b_before"] = b.ratings;
        doc["b_after"] = ub.ratings;
        doc["display_a_before"] = role_display_rating(a, weights);
        doc["display_a_after"] = role_display_rating(ua, weights);
        doc["display_b_before"] = role_display_rating(b, weights);
        doc["display_b_after"] = role_display_rating(ub, weights);
        emit(doc);
    } else {
        std::cout << "expected score (" << options.role_a << " side): "
                  << format_fixed(expected, 4) << ", actual "
                  << format_number(options.score) << ", K "
                  << format_number(options.k) << '\n';
        for (std::size_t i = 0; i < labels.size(); ++i) {
            std::cout << labels[i] << ": A " << format_fixed(a.ratings[i], 2)
                      << " -> " << format_fixed(ua.ratings[i], 2) << ", B "
                      << format_fixed(b.ratings[i], 2) << " -> "
                      << format_fixed(ub.ratings[i], 2) << '\n';
        }
        std::cout << "display rating: A " << format_fixed(role_display_rating(a, weights), 2)
                  << " -> " << format_fixed(role_display_rating(ua, weights), 2)
                  << ", B " << format_fixed(role_display_rating(b, weights), 2)
                  << " -> " << format_fixed(role_display_rating(ub, weights), 2)
                  << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"combined Elo ratings: aggregation, matchups, leaderboards, "
                 "and consistency checks"};
    app.require_subcommand(1);

    CombineOptions combine_options;
    auto* combine = app.add_subcommand(
        "combine", "combine a rating vector (or every player in a file)");
    combine->add_option("ratings", combine_options.ratings,
                        "rating values, e.g. 2840 2832 2869");
    combine->add_option("--input", combine_options.input, "ratings file");
    combine->add_option("--format", combine_options.format, "csv, json, or auto");
    combine->add_option("--weights", combine_options.weights,
                        "comma-separated weights (default: equal)");
    combine->add_option("--output", combine_options.output, "text or json");

    MatchupOptions matchup_options;
    auto* matchup = app.add_subcommand("matchup", "pairwise comparison report");
    matchup->add_option("--input", matchup_options.input, "ratings file");
    matchup->add_option("--format", matchup_options.format, "csv, json, or auto");
    matchup->add_option("--a", matchup_options.a, "first player name");
    matchup->add_option("--b", matchup_options.b, "second player name");
    matchup->add_option("--ratings-a", matchup_options.ratings_a,
                        "first player's ratings, comma separated");
    matchup->add_option("--ratings-b", matchup_options.ratings_b,
                        "second player's ratings, comma separated");
    matchup->add_option("--formats", matchup_options.formats,
                        "format labels for direct ratings");
    matchup->add_option("--weights", matchup_options.weights, "weights");
    matchup->add_option("--pi", matchup_options.pi,
                        "format-selection probabilities ('uniform' or a list)");
    matchup->add_option("--output", matchup_options.output, "text or json");

    TableOptions rank_options;
    auto* rank = app.add_subcommand("rank", "leaderboard by combined rating");
    rank->add_option("--input", rank_options.input, "ratings file")->required();
    rank->add_option("--format", rank_options.format, "csv, json, or auto");
    rank->add_option("--weights", rank_options.weights, "weights");
    rank->add_option("--output", rank_options.output, "text or json");

    TableOptions compare_options;
    auto* compare = app.add_subcommand(
        "compare", "arithmetic / power-mean / combined comparison table");
    compare->add_option("--input", compare_options.input, "ratings file")->required();
    compare->add_option("--format", compare_options.format, "csv, json, or auto");
    compare->add_option("--weights", compare_options.weights, "weights");
    compare->add_option("--p", compare_options.p_list,
                        "power-mean parameters, comma separated");
    compare->add_option("--output", compare_options.output, "text or json");

    VerifyOptions verify_options;
    auto* verify = app.add_subcommand(
        "verify-axioms", "run the randomized consistency checks on a rule");
    verify->add_option("--rule", verify_options.rule,
                       "all, main, arithmetic, piecewise, entropy, power-mean");
    verify->add_option("--eta", verify_options.eta, "entropy rule parameter");
    verify->add_option("--p", verify_options.p, "power-mean parameter");
    verify->add_option("--seed", verify_options.seed, "random seed");
    verify->add_option("--samples", verify_options.samples, "samples per check");
    verify->add_option("--output", verify_options.output, "text or json");

    std::string cycle_output = "text";
    auto* cycle = app.add_subcommand(
        "cycle-demo", "lottery cycle that no scalar rating can represent");
    cycle->add_option("--output", cycle_output, "text or json");

    RoleUpdateOptions role_options;
    auto* role = app.add_subcommand("role-update",
                                    "per-role Elo update after one game");
    role->add_option("--roles", role_options.roles, "role labels (default white,black)");
    role->add_option("--a", role_options.ratings_a, "first player's role ratings")
        ->required();
    role->add_option("--b", role_options.ratings_b, "second player's role ratings")
        ->required();
    role->add_option("--role-a", role_options.role_a, "role played by the first player")
        ->required();
    role->add_option("--role-b", role_options.role_b, "role played by the second player")
        ->required();
    role->add_option("--score", role_options.score,
                     "first player's score: 0, 0.5, or 1")
        ->required();
    role->add_option("--k", role_options.k, "update factor K");
    role->add_option("--weights", role_options.weights,
                     "weights for the displayed rating");
    role->add_option("--output", role_options.output, "text or json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (combine->parsed()) {
            return run_combine(combine_options);
        }
        if (matchup->parsed()) {
            return run_matchup(matchup_options);
        }
        if (rank->parsed()) {
            return run_rank(rank_options);
        }
        if (compare->parsed()) {
            return run_compare(compare_options);
        }
        if (verify->parsed()) {
            return run_verify(verify_options);
        }
        if (cycle->parsed()) {
            return run_cycle(cycle_output);
        }
        if (role->parsed()) {
            return run_role_update(role_options);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
