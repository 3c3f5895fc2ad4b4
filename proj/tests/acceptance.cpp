// End-to-end acceptance checks. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "multielo/multielo.hpp"

using namespace multielo;

namespace {

int g_detail_failures = 0;

void expect(bool ok, const char* what) {
    if (!ok) {
        ++g_detail_failures;
        std::printf("       detail: %s\n", what);
    }
}

void expect_near(double value, double expected, double tol, const char* what) {
    if (!(std::abs(value - expected) <= tol)) {
        ++g_detail_failures;
        std::printf("       detail: %s: got %.12g, expected %.12g (tol %.1g)\n", what,
                    value, expected, tol);
    }
}

bool run(int number, const char* label, bool (*criterion)()) {
    g_detail_failures = 0;
    const bool ok = criterion() && g_detail_failures == 0;
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", number, label);
    return ok;
}

double uniform(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(gen() >> 11) * 0x1.0p-53);
}

std::vector<double> random_vec(std::mt19937_64& gen, std::size_t n, double lo,
                               double hi) {
    std::vector<double> v(n);
    for (auto& x : v) {
        x = uniform(gen, lo, hi);
    }
    return v;
}

// --------------------------------------------------------------------------
// 1. Worked three-format example.

bool criterion_worked_example() {
    const std::vector<double> a{2840.0, 2832.0, 2869.0};
    const std::vector<double> b{2732.0, 2692.0, 2646.0};
    const std::vector<double> w{1.0, 1.0, 1.0};
    const std::vector<double> pi{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    const double ca = combined_rating(a, w);
    const double cb = combined_rating(b, w);
    expect_near(ca, 2847.74, 0.01, "combined rating of A");
    expect_near(cb, 2693.52, 0.01, "combined rating of B");
    expect_near(ca - cb, 154.22, 0.01, "combined difference");
    expect_near(pairwise_probability(a, b, w), 0.7084, 1e-4, "combined probability");
    expect_near(expected_score(a[0], b[0]), 0.6506, 1e-4, "classical score");
    expect_near(expected_score(a[1], b[1]), 0.6912, 1e-4, "rapid score");
    expect_near(expected_score(a[2], b[2]), 0.7831, 1e-4, "blitz score");
    expect_near(lottery_probability(a, b, pi), 0.7083, 1e-4, "uniform lottery");
    return true;
}

// --------------------------------------------------------------------------
// 2. Top-20 fixture leaderboard, every rounded rating and rank as printed.

struct ExpectedRow {
    const char* name;
    long long combined;
};

bool criterion_leaderboard() {
    static const ExpectedRow expected[20] = {
        {"Carlsen, Magnus", 2848},        {"Nakamura, Hikaru", 2795},
        {"Firouzja, Alireza", 2771},      {"Abdusattorov, Nodirbek", 2760},
        {"Erigaisi, Arjun", 2757},        {"Caruana, Fabiano", 2757},
        {"So, Wesley", 2756},             {"Nepomniachtchi, Ian", 2741},
        {"Vachier-Lagrave, Maxime", 2739}, {"Aronian, Levon", 2731},
        {"Sindarov, Javokhir", 2728},     {"Wei, Yi", 2727},
        {"Duda, Jan-Krzysztof", 2724},    {"Dubov, Daniil", 2721},
        {"Fedoseev, Vladimir", 2719},     {"Giri, Anish", 2713},
        {"Nihal Sarin", 2712},            {"Artemiev, Vladislav", 2708},
        {"Leko, Peter", 2707},            {"Praggnanandhaa R", 2700},
    };
    const auto table =
        load_ratings_file(std::string(MULTIELO_FIXTURE_DIR) + "/top20.csv");
    const auto board = rank_players(table);
    if (board.rows.size() != 20) {
        expect(false, "fixture does not contain 20 players");
        return false;
    }
    int matched = 0;
    for (std::size_t i = 0; i < 20; ++i) {
        const bool row_ok = board.rows[i].name == expected[i].name &&
                            board.rows[i].combined_display == expected[i].combined &&
                            board.rows[i].combined_rank == static_cast<int>(i + 1);
        if (row_ok) {
            ++matched;
        } else {
            std::printf("       detail: row %zu: got %s/%lld, expected %s/%lld\n",
                        i + 1, board.rows[i].name.c_str(),
                        board.rows[i].combined_display, expected[i].name,
                        expected[i].combined);
        }
    }
    expect(matched == 20, "leaderboard rows matched");
    return matched == 20;
}

// --------------------------------------------------------------------------
// 3. Rotated-profile cycle.

bool criterion_cycle() {
    const auto report = verify_cycle();
    for (double lottery : report.lottery) {
        expect_near(lottery, 677.0 / 1111.0, 1e-12, "uniform lottery probability");
    }
    expect(report.cyclic(), "every lottery strictly favors the first player");
    expect(report.combined_spread() <= 1e-9, "combined ratings agree within 1e-9");
    return true;
}

// --------------------------------------------------------------------------
// 4. Independence matrix and the explicit grouping witness.

bool criterion_independence() {
    const AggregationRule rules[4] = {main_rule(), arithmetic_rule(),
                                      piecewise_rule(), entropy_rule(1.0)};
    const bool expected_matrix[4][3] = {
        {true, true, true},    // main
        {true, true, false},   // arithmetic
        {true, false, true},   // piecewise
        {false, true, true},   // entropy
    };
    for (int i = 0; i < 4; ++i) {
        const auto report = check_axioms(rules[i]);
        const bool observed[3] = {report.normalization.holds, report.recursion.holds,
                                  report.marginal.holds};
        for (int j = 0; j < 3; ++j) {
            if (observed[j] != expected_matrix[i][j]) {
                ++g_detail_failures;
                std::printf("       detail: rule %s check %d: got %d, expected %d\n",
                            report.rule_id.c_str(), j, observed[j],
                            expected_matrix[i][j]);
            }
        }
    }
    // the documented witness: direct 800/3 vs grouped 400 log10 7
    const std::vector<double> r{0.0, 400.0, 400.0};
    const std::vector<double> w{1.0, 1.0, 1.0};
    const double direct = evaluate_rule(piecewise_rule(), r, w);
    const double grouped = grouped_evaluate(piecewise_rule(), r, w, {{0, 1}, {2}});
    expect_near(direct, 800.0 / 3.0, 1e-9, "piecewise direct aggregation");
    expect_near(grouped, 400.0 * std::log10(7.0), 1e-9, "piecewise grouped aggregation");
    expect(std::abs(direct - grouped) > 70.0, "witness gap exceeds 70 rating points");
    return true;
}

// --------------------------------------------------------------------------
// 5. Property suites, 1000 seeded instances each.

bool property_normalization() {
    std::mt19937_64 gen(101);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 1 + gen() % 6;
        const double level = uniform(gen, -4000.0, 4000.0);
        const auto w = random_vec(gen, n, 0.1, 10.0);
        if (std::abs(combined_rating(std::vector<double>(n, level), w) - level) >
            1e-9) {
            return false;
        }
    }
    return true;
}

bool property_translation() {
    std::mt19937_64 gen(102);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 1 + gen() % 6;
        const auto r = random_vec(gen, n, 1000.0, 3000.0);
        const auto w = random_vec(gen, n, 0.1, 10.0);
        const double delta = uniform(gen, -1000.0, 1000.0);
        auto shifted = r;
        for (auto& v : shifted) {
            v += delta;
        }
        if (std::abs(combined_rating(shifted, w) - combined_rating(r, w) - delta) >
            1e-9) {
            return false;
        }
    }
    return true;
}

bool property_internality() {
    std::mt19937_64 gen(103);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 1 + gen() % 6;
        const auto r = random_vec(gen, n, 1000.0, 3000.0);
        const auto w = random_vec(gen, n, 0.1, 10.0);
        const double combined = combined_rating(r, w);
        if (combined < *std::min_element(r.begin(), r.end()) ||
            combined > *std::max_element(r.begin(), r.end())) {
            return false;
        }
    }
    return true;
}

bool property_relabeling() {
    std::mt19937_64 gen(104);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 2 + gen() % 5;
        const auto r = random_vec(gen, n, 1000.0, 3000.0);
        const auto w = random_vec(gen, n, 0.1, 10.0);
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), gen);
        std::vector<double> pr(n), pw(n);
        for (std::size_t k = 0; k < n; ++k) {
            pr[k] = r[perm[k]];
            pw[k] = w[perm[k]];
        }
        if (std::abs(combined_rating(pr, pw) - combined_rating(r, w)) > 1e-9) {
            return false;
        }
    }
    return true;
}

bool property_weight_scale() {
    std::mt19937_64 gen(105);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 1 + gen() % 6;
        const auto r = random_vec(gen, n, 1000.0, 3000.0);
        const auto w = random_vec(gen, n, 0.1, 10.0);
        auto scaled = w;
        const double alpha = std::pow(10.0, uniform(gen, -3.0, 3.0));
        for (auto& v : scaled) {
            v *= alpha;
        }
        if (std::abs(combined_rating(r, scaled) - combined_rating(r, w)) > 1e-9) {
            return false;
        }
    }
    return true;
}

bool property_recursion_all_partitions() {
    std::mt19937_64 gen(106);
    std::vector<std::vector<Partition>> partitions_by_n(6);
    for (std::size_t n = 2; n <= 5; ++n) {
        partitions_by_n[n] = all_partitions(n);
    }
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 2 + gen() % 4;
        const auto r = random_vec(gen, n, 1000.0, 3000.0);
        const auto w = random_vec(gen, n, 0.1, 10.0);
        const double direct = combined_rating(r, w);
        for (const auto& partition : partitions_by_n[n]) {
            if (std::abs(recursive_aggregate(r, w, partition) - direct) > 1e-9) {
                return false;
            }
        }
    }
    return true;
}

bool property_marginal_weights_fd() {
    std::mt19937_64 gen(107);
    const double h = 1e-3;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 1 + gen() % 6;
        const auto r = random_vec(gen, n, 1000.0, 3000.0);
        const auto w = random_vec(gen, n, 0.1, 10.0);
        const auto mw = marginal_weights(r, w);
        for (std::size_t j = 0; j < n; ++j) {
            auto up = r;
            auto down = r;
            up[j] += h;
            down[j] -= h;
            const double fd =
                (combined_rating(up, w) - combined_rating(down, w)) / (2.0 * h);
            if (std::abs(mw[j] - fd) > 1e-6) {
                return false;
            }
        }
    }
    return true;
}

bool property_marginal_ratio() {
    std::mt19937_64 gen(108);
    const auto rule = [](std::span<const double> r, std::span<const double> w) {
        return combined_rating(r, w);
    };
    for (int i = 0; i < 1000; ++i) {
        const double x = uniform(gen, 1000.0, 3000.0);
        const double y = uniform(gen, 1000.0, 3000.0);
        const double expected = odds(x, y);
        if (std::abs(marginal_ratio(rule, x, y) - expected) / expected > 1e-4) {
            return false;
        }
    }
    return true;
}

bool property_pairwise_pooling() {
    std::mt19937_64 gen(109);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 1 + gen() % 6;
        const auto r = random_vec(gen, n, 1000.0, 3000.0);
        const auto s = random_vec(gen, n, 1000.0, 3000.0);
        const auto w = random_vec(gen, n, 0.1, 10.0);
        const double pooled = pairwise_probability(r, s, w);
        const double scalar =
            expected_score(combined_rating(r, w), combined_rating(s, w));
        if (std::abs(pooled - scalar) > 1e-12) {
            return false;
        }
    }
    return true;
}

bool property_decomposition() {
    std::mt19937_64 gen(110);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 1 + gen() % 6;
        const auto r = random_vec(gen, n, 1000.0, 3000.0);
        const auto s = random_vec(gen, n, 1000.0, 3000.0);
        const auto w = random_vec(gen, n, 0.1, 10.0);
        if (std::abs(decompose_combined_probability(r, s, w).reconstructed -
                     pairwise_probability(r, s, w)) > 1e-12) {
            return false;
        }
    }
    return true;
}

bool property_power_mean_unit() {
    std::mt19937_64 gen(111);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 1 + gen() % 6;
        const auto r = random_vec(gen, n, 1000.0, 3000.0);
        const auto w = random_vec(gen, n, 0.1, 10.0);
        if (std::abs(power_mean_rating(r, w, 1.0) - combined_rating(r, w)) > 1e-9) {
            return false;
        }
    }
    return true;
}

bool criterion_properties() {
    struct Property {
        const char* name;
        bool (*check)();
    };
    static const Property properties[] = {
        {"normalization", property_normalization},
        {"translation equivariance", property_translation},
        {"internality", property_internality},
        {"joint relabeling", property_relabeling},
        {"weight-scale invariance", property_weight_scale},
        {"recursion over all partitions (n <= 5)", property_recursion_all_partitions},
        {"marginal weights vs finite differences", property_marginal_weights_fd},
        {"marginal ratio equals the odds", property_marginal_ratio},
        {"pairwise probability pooling form", property_pairwise_pooling},
        {"endogenous-weight decomposition", property_decomposition},
        {"power mean p=1 equivalence", property_power_mean_unit},
    };
    bool all_ok = true;
    for (const auto& property : properties) {
        const bool ok = property.check();
        if (!ok) {
            all_ok = false;
            std::printf("       detail: property failed: %s\n", property.name);
        }
    }
    return all_ok;
}

// --------------------------------------------------------------------------
// 6. Weight recovery.

bool criterion_weight_recovery() {
    std::mt19937_64 gen(112);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + gen() % 6;
        const auto generating = normalize_weights(random_vec(gen, n, 0.1, 10.0));
        const auto rule = [&](std::span<const double> r) {
            return combined_rating(r, generating);
        };
        const auto recovered = recover_weights(rule, n);
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(recovered[j] - generating[j]) > 1e-9) {
                expect(false, "recovered weight off by more than 1e-9");
                return false;
            }
        }
    }
    bool rejected = false;
    try {
        recover_weights(
            [](std::span<const double> r) { return arithmetic_rating(r); }, 3);
    } catch (const NotRepresentableError&) {
        rejected = true;
    }
    expect(rejected, "arithmetic-mean rule reported not representable");
    return true;
}

} // namespace

int main() {
    int failures = 0;
    failures += !run(1, "three-format worked example", criterion_worked_example);
    failures += !run(2, "top-20 fixture leaderboard reproduced 20/20",
                     criterion_leaderboard);
    failures += !run(3, "uniform-lottery cycle at 677/1111 with equal combined "
                        "ratings", criterion_cycle);
    failures += !run(4, "axiom independence matrix and grouping witness",
                     criterion_independence);
    failures += !run(5, "property suites (11 identities, 1000 instances each)",
                     criterion_properties);
    failures += !run(6, "weight recovery round trip and rejection",
                     criterion_weight_recovery);
    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", failures);
    }
    return failures == 0 ? 0 : 1;
}
