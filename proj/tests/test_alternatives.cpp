#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "multielo/alternatives.hpp"
#include "multielo/verification.hpp"

using namespace multielo;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

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

} // namespace

TEST_CASE("arithmetic_rating basics") {
    const std::vector<double> w{1.0, 1.0};
    CHECK(arithmetic_rating(std::vector<double>{1777.0, 1777.0}, w) == 1777.0);
    CHECK(arithmetic_rating(std::vector<double>{0.0, 400.0}, w) == 200.0);
    CHECK_THROWS_AS(arithmetic_rating(std::vector<double>{0.0, 400.0},
                                      std::vector<double>{1.0}),
                    DimensionError);
}

TEST_CASE("arithmetic_rating is the p -> 0 power-mean limit") {
    std::mt19937_64 gen(51);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 2 + gen() % 4;
        const auto r = random_vec(gen, n, 1000.0, 3000.0);
        const auto w = random_vec(gen, n, 0.1, 10.0);
        CHECK_THAT(power_mean_rating(r, w, 1e-8),
                   WithinAbs(arithmetic_rating(r, w), 1e-4));
        // the p = 0 branch is the exact geometric mean on the strength scale
        double log_strength = 0.0;
        double wsum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            log_strength += w[j] * r[j];
            wsum += w[j];
        }
        CHECK_THAT(power_mean_rating(r, w, 0.0), WithinAbs(log_strength / wsum, 1e-9));
    }
}

TEST_CASE("power_mean_rating point values") {
    const std::vector<double> r{0.0, 400.0};
    const std::vector<double> w{1.0, 1.0};
    // 400 log10(sqrt((1 + 100) / 2)), frozen from a 50-digit evaluation
    CHECK_THAT(power_mean_rating(r, w, 2.0), WithinAbs(340.65827562373228, 1e-9));
    CHECK(power_mean_rating(r, w, 1.0) == combined_rating(r, w));
}

TEST_CASE("power_mean_rating at p = 1 equals the combined rating") {
    std::mt19937_64 gen(52);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 1 + gen() % 6;
        const auto r = random_vec(gen, n, 1000.0, 3000.0);
        const auto w = random_vec(gen, n, 0.1, 10.0);
        CHECK_THAT(power_mean_rating(r, w, 1.0),
                   WithinAbs(combined_rating(r, w), 1e-9));
    }
}

TEST_CASE("power means are monotone in p") {
    std::mt19937_64 gen(53);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 2 + gen() % 4;
        auto r = random_vec(gen, n, 1000.0, 3000.0);
        r[0] = r[1] + 200.0;  // guarantee a real spread
        const auto w = random_vec(gen, n, 0.1, 10.0);
        const double p1 = uniform(gen, -3.0, 3.0);
        const double p2 = p1 + uniform(gen, 0.1, 2.0);
        CHECK(power_mean_rating(r, w, p1) < power_mean_rating(r, w, p2));
    }
}

TEST_CASE("power means inherit internality and translation equivariance") {
    std::mt19937_64 gen(54);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 2 + gen() % 4;
        const auto r = random_vec(gen, n, 1000.0, 3000.0);
        const auto w = random_vec(gen, n, 0.1, 10.0);
        const double p = uniform(gen, -2.0, 3.0);
        const double value = power_mean_rating(r, w, p);
        CHECK(value >= *std::min_element(r.begin(), r.end()) - 1e-9);
        CHECK(value <= *std::max_element(r.begin(), r.end()) + 1e-9);
        const double delta = uniform(gen, -500.0, 500.0);
        std::vector<double> shifted(r);
        for (auto& v : shifted) {
            v += delta;
        }
        CHECK_THAT(power_mean_rating(shifted, w, p), WithinAbs(value + delta, 1e-9));
    }
}

TEST_CASE("power_mean_rating stays stable for large p") {
    const std::vector<double> r{1000.0, 2000.0, 3000.0};
    const std::vector<double> w{1.0, 1.0, 1.0};
    const double high = power_mean_rating(r, w, 200.0);
    CHECK(std::isfinite(high));
    CHECK_THAT(high, WithinAbs(3000.0, 1.0));  // large p approaches the max
    const double low = power_mean_rating(r, w, -200.0);
    CHECK(std::isfinite(low));
    CHECK_THAT(low, WithinAbs(1000.0, 1.0));
}

TEST_CASE("marginal_ratio of the main rule matches the odds") {
    const auto rule = main_rule();
    CHECK_THAT(marginal_ratio(rule.evaluate, 2100.0, 2100.0), WithinAbs(1.0, 1e-9));
    CHECK_THAT(marginal_ratio(rule.evaluate, 2500.0, 2100.0), WithinRel(10.0, 1e-5));
}

TEST_CASE("marginal_ratio of the arithmetic rule is one") {
    const auto rule = arithmetic_rule();
    CHECK_THAT(marginal_ratio(rule.evaluate, 2500.0, 2100.0), WithinAbs(1.0, 1e-9));
    CHECK_THAT(marginal_ratio(rule.evaluate, 1000.0, 2900.0), WithinAbs(1.0, 1e-9));
}

TEST_CASE("marginal_ratio of power means scales the odds exponent by p") {
    std::mt19937_64 gen(55);
    for (double p : {0.5, 2.0}) {
        const auto rule = power_mean_rule(p);
        for (int i = 0; i < 100; ++i) {
            const double x = uniform(gen, 1200.0, 2800.0);
            const double y = x + uniform(gen, -800.0, 800.0);
            CHECK_THAT(marginal_ratio(rule.evaluate, x, y),
                       WithinRel(std::pow(odds(x, y), p), 1e-5));
        }
    }
}

TEST_CASE("marginal_ratio reports degenerate rules") {
    const auto constant = [](std::span<const double>, std::span<const double>) {
        return 1500.0;
    };
    CHECK_THROWS_AS(marginal_ratio(constant, 2000.0, 2100.0), NumericError);
    CHECK_THROWS_AS(marginal_ratio(main_rule().evaluate, 2000.0, 2100.0, -1.0),
                    InvalidInputError);
}
