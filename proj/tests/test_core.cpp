#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>

#include "multielo/core.hpp"

using namespace multielo;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

double uniform(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(gen() >> 11) * 0x1.0p-53);
}

} // namespace

TEST_CASE("strength maps ratings to the multiplicative scale") {
    CHECK(strength(0.0) == 1.0);
    CHECK_THAT(strength(400.0), WithinRel(10.0, 1e-12));
    // 10^(2840/400), frozen from a 50-digit evaluation
    CHECK_THAT(strength(2840.0), WithinRel(1.2589254117941672e7, 1e-12));

    std::mt19937_64 gen(11);
    for (int i = 0; i < 1000; ++i) {
        const double a = uniform(gen, -4000.0, 4000.0);
        const double b = a + uniform(gen, 1e-6, 2000.0);
        CHECK(strength(b) > strength(a));
    }
}

TEST_CASE("strength rejects non-finite ratings") {
    CHECK_THROWS_AS(strength(std::numeric_limits<double>::quiet_NaN()),
                    InvalidInputError);
    CHECK_THROWS_AS(strength(std::numeric_limits<double>::infinity()),
                    InvalidInputError);
}

TEST_CASE("rating_from_strength inverts strength") {
    CHECK(rating_from_strength(1.0) == 0.0);
    // 400 log10(7) and 400 log10(11/2), frozen from a 50-digit evaluation
    CHECK_THAT(rating_from_strength(7.0), WithinAbs(338.03921600570273, 1e-9));
    CHECK_THAT(rating_from_strength(5.5), WithinAbs(296.14507579769754, 1e-9));

    std::mt19937_64 gen(12);
    for (int i = 0; i < 1000; ++i) {
        const double r = uniform(gen, -4000.0, 4000.0);
        CHECK_THAT(rating_from_strength(strength(r)), WithinAbs(r, 1e-9));
    }
}

TEST_CASE("rating_from_strength rejects non-positive input") {
    CHECK_THROWS_AS(rating_from_strength(0.0), InvalidInputError);
    CHECK_THROWS_AS(rating_from_strength(-2.0), InvalidInputError);
    CHECK_THROWS_AS(rating_from_strength(std::numeric_limits<double>::quiet_NaN()),
                    InvalidInputError);
    CHECK_THROWS_AS(rating_from_strength(std::numeric_limits<double>::infinity()),
                    InvalidInputError);
}

TEST_CASE("expected_score basics") {
    CHECK(expected_score(1735.0, 1735.0) == 0.5);
    CHECK_THAT(expected_score(2400.0, 2000.0), WithinAbs(10.0 / 11.0, 1e-12));
    CHECK_THAT(expected_score(2840.0, 2732.0), WithinAbs(0.6506, 1e-4));
}

TEST_CASE("expected_score complements sum to one") {
    std::mt19937_64 gen(13);
    for (int i = 0; i < 1000; ++i) {
        const double a = uniform(gen, -3000.0, 3000.0);
        const double b = uniform(gen, -3000.0, 3000.0);
        CHECK_THAT(expected_score(a, b) + expected_score(b, a),
                   WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("expected_score saturates without overflow at extreme gaps") {
    CHECK(expected_score(20000.0, 0.0) == 1.0);
    CHECK(expected_score(0.0, 200000.0) == 0.0);
    CHECK(std::isfinite(expected_score(-50000.0, 50000.0)));
    CHECK_THROWS_AS(expected_score(std::numeric_limits<double>::quiet_NaN(), 0.0),
                    InvalidInputError);
}

TEST_CASE("odds follow the ten-to-one rule") {
    CHECK(odds(1500.0, 1500.0) == 1.0);
    CHECK_THAT(odds(2000.0, 1600.0), WithinRel(10.0, 1e-12));
    CHECK_THAT(odds(2000.0, 1200.0), WithinRel(100.0, 1e-12));
}

TEST_CASE("odds are reciprocal and strength is multiplicative") {
    std::mt19937_64 gen(14);
    for (int i = 0; i < 1000; ++i) {
        const double a = uniform(gen, -3000.0, 3000.0);
        const double b = uniform(gen, -3000.0, 3000.0);
        CHECK_THAT(odds(a, b) * odds(b, a), WithinRel(1.0, 1e-12));
        const double delta = uniform(gen, -1000.0, 1000.0);
        CHECK_THAT(strength(a + delta), WithinRel(strength(a) * strength(delta), 1e-12));
    }
}
