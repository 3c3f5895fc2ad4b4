#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "multielo/errors.hpp"

namespace multielo {

// A 400-point rating difference is ten-to-one odds, so every map between the
// rating scale and the strength scale goes through 10^(x/400). All of them
// are computed as exp(x * kLn10Over400) with this one shared constant, which
// keeps strength, odds, and expected score consistent to the last bit.
inline constexpr double kLn10Over400 = std::numbers::ln10 / 400.0;

namespace detail {

inline void require_finite(double value, const char* what) {
    if (!std::isfinite(value)) {
        throw InvalidInputError(std::string(what) + " must be finite");
    }
}

} // namespace detail

// Elo strength q(r) = 10^(r/400). Strictly increasing, always positive.
inline double strength(double rating) {
    detail::require_finite(rating, "rating");
    return std::exp(rating * kLn10Over400);
}

// Inverse strength map q^-1(s) = 400 log10(s).
inline double rating_from_strength(double s) {
    if (!std::isfinite(s) || s <= 0.0) {
        throw InvalidInputError("strength must be positive and finite");
    }
    return std::log(s) / kLn10Over400;
}

// Expected score of rating a against rating b: 1 / (1 + 10^((b-a)/400)),
// equivalently q(a) / (q(a) + q(b)). The logistic form saturates gracefully;
// extreme rating gaps round to exactly 0 or 1 instead of overflowing.
inline double expected_score(double a, double b) {
    detail::require_finite(a, "rating");
    detail::require_finite(b, "rating");
    return 1.0 / (1.0 + std::exp((b - a) * kLn10Over400));
}

// Odds of a against b: E/(1-E) = 10^((a-b)/400) = q(a)/q(b).
inline double odds(double a, double b) {
    detail::require_finite(a, "rating");
    detail::require_finite(b, "rating");
    return std::exp((a - b) * kLn10Over400);
}

} // namespace multielo
