#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "multielo/aggregate.hpp"
#include "multielo/core.hpp"
#include "multielo/errors.hpp"

namespace multielo {

// Weighted arithmetic mean on the rating scale, sum(a_i R_i) / sum(a_i).
// On the strength scale this is the weighted geometric mean, i.e. the p -> 0
// limit of the power-mean family.
inline double arithmetic_rating(std::span<const double> ratings,
                                std::span<const double> weights) {
    detail::check_profile_weights(ratings, weights);
    double acc = 0.0;
    double wsum = 0.0;
    for (std::size_t i = 0; i < ratings.size(); ++i) {
        acc += weights[i] * ratings[i];
        wsum += weights[i];
    }
    return acc / wsum;
}

inline double arithmetic_rating(std::span<const double> ratings) {
    return arithmetic_rating(ratings, std::vector<double>(ratings.size(), 1.0));
}

// Rating of the p-th power mean of strengths,
//   400 log10( (sum w_i q(R_i)^p / sum w_i)^(1/p) ).
// Since q(R)^p = q(pR), this is combined_rating(p * R, w) / p, which reuses
// the shifted log-sum-exp path and makes p = 1 reproduce the combined rating
// exactly. p = 0 is the geometric-mean limit, handled as an explicit branch
// (the rating-scale arithmetic mean) rather than numerically.
inline double power_mean_rating(std::span<const double> ratings,
                                std::span<const double> weights, double p) {
    detail::require_finite(p, "power-mean parameter");
    if (p == 0.0) {
        return arithmetic_rating(ratings, weights);
    }
    std::vector<double> scaled(ratings.begin(), ratings.end());
    for (double& r : scaled) {
        r *= p;
    }
    return combined_rating(scaled, weights) / p;
}

// Central finite-difference ratio of the two partial derivatives of a
// two-coordinate equal-weight rule at (x, y). The step is in Elo points;
// 0.1 keeps both the truncation term and the subtractive rounding noise
// well inside 1e-5 relative over realistic rating gaps.
inline constexpr double kMarginalRatioStep = 0.1;

template <typename Rule>
double marginal_ratio(Rule&& rule, double x, double y,
                      double step = kMarginalRatioStep) {
    detail::require_finite(x, "rating");
    detail::require_finite(y, "rating");
    if (!std::isfinite(step) || step <= 0.0) {
        throw InvalidInputError("finite-difference step must be positive");
    }
    const double weights[2] = {1.0, 1.0};
    const auto eval = [&](double a, double b) {
        const double ratings[2] = {a, b};
        return rule(std::span<const double>(ratings, 2),
                    std::span<const double>(weights, 2));
    };
    const double dx = (eval(x + step, y) - eval(x - step, y)) / (2.0 * step);
    const double dy = (eval(x, y + step) - eval(x, y - step)) / (2.0 * step);
    if (!std::isfinite(dx) || !std::isfinite(dy) || dy <= 0.0 || dx <= 0.0) {
        throw NumericError("rule is not strictly increasing near the probe point");
    }
    return dx / dy;
}

} // namespace multielo
