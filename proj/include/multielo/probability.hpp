#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "multielo/aggregate.hpp"
#include "multielo/core.hpp"
#include "multielo/errors.hpp"
#include "multielo/profile.hpp"

namespace multielo {

namespace detail {

inline void check_pair(std::span<const double> r, std::span<const double> s,
                       std::span<const double> weights) {
    check_ratings(r);
    check_ratings(s);
    check_weights(weights);
    if (r.size() != s.size() || r.size() != weights.size()) {
        throw DimensionError("matchup profiles and weights must share one length");
    }
}

inline void check_distribution(std::span<const double> pi, std::size_t n) {
    if (pi.size() != n) {
        throw DimensionError("format distribution length does not match profiles");
    }
    double total = 0.0;
    for (double p : pi) {
        if (!std::isfinite(p) || p < 0.0) {
            throw InvalidDistributionError(
                "format probabilities must be finite and non-negative");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw InvalidDistributionError("format probabilities must sum to one");
    }
}

} // namespace detail

// Win probability of profile R against profile S under shared weights:
//   sum(w_i q(R_i)) / (sum(w_i q(R_i)) + sum(w_i q(S_i))).
// This is the Bradley-Terry form with aggregate strength equal to the
// weighted mean of coordinate strengths, and coincides with the expected
// score of the two combined ratings. Both sums share one log-sum-exp shift,
// which cancels, so extreme profiles stay in range.
inline double pairwise_probability(std::span<const double> r,
                                   std::span<const double> s,
                                   std::span<const double> weights) {
    detail::check_pair(r, s, weights);
    const double m = std::max(detail::max_weighted_rating(r, weights),
                              detail::max_weighted_rating(s, weights));
    double mass_r = 0.0;
    double mass_s = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (weights[i] > 0.0) {
            mass_r += weights[i] * std::exp((r[i] - m) * kLn10Over400);
            mass_s += weights[i] * std::exp((s[i] - m) * kLn10Over400);
        }
    }
    return mass_r / (mass_r + mass_s);
}

inline double pairwise_probability(std::span<const double> r,
                                   std::span<const double> s) {
    return pairwise_probability(r, s, std::vector<double>(r.size(), 1.0));
}

// Random-format expected score: the format is drawn from pi first, then the
// game is scored with that format's ratings, giving sum(pi_i p_i(R, S)).
inline double lottery_probability(std::span<const double> r,
                                  std::span<const double> s,
                                  std::span<const double> pi) {
    detail::check_ratings(r);
    detail::check_ratings(s);
    if (r.size() != s.size()) {
        throw DimensionError("matchup profiles must share one length");
    }
    detail::check_distribution(pi, r.size());
    double total = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        total += pi[i] * expected_score(r[i], s[i]);
    }
    return total;
}

// Matchup-dependent convex weights w_i = w'_i / sum w'_j with
// w'_i = lambda_i (q(R_i) + q(S_i)). They express the combined-rating
// probability as a mixture of per-format expected scores.
inline std::vector<double> endogenous_weights(std::span<const double> r,
                                              std::span<const double> s,
                                              std::span<const double> weights) {
    detail::check_pair(r, s, weights);
    const double m = std::max(detail::max_weighted_rating(r, weights),
                              detail::max_weighted_rating(s, weights));
    std::vector<double> out(r.size(), 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (weights[i] > 0.0) {
            out[i] = weights[i] * (std::exp((r[i] - m) * kLn10Over400) +
                                   std::exp((s[i] - m) * kLn10Over400));
            total += out[i];
        }
    }
    for (double& v : out) {
        v /= total;
    }
    return out;
}

struct ProbabilityDecomposition {
    std::vector<double> weights;            // endogenous matchup weights
    std::vector<double> per_format_scores;  // p_i(R, S)
    double reconstructed = 0.0;             // sum w_i p_i
};

// Splits the combined-rating probability into endogenous weights and
// per-format expected scores; the mixture reconstructs it.
inline ProbabilityDecomposition decompose_combined_probability(
    std::span<const double> r, std::span<const double> s,
    std::span<const double> weights) {
    detail::check_pair(r, s, weights);
    ProbabilityDecomposition out;
    out.weights = endogenous_weights(r, s, weights);
    out.per_format_scores.reserve(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        out.per_format_scores.push_back(expected_score(r[i], s[i]));
    }
    for (std::size_t i = 0; i < r.size(); ++i) {
        out.reconstructed += out.weights[i] * out.per_format_scores[i];
    }
    return out;
}

// The one-parameter family of scalar ratings compatible with component-level
// pooling: 400 log10(sum(w_i q(R_i))) + K. The member with
// K = -400 log10(sum w_i) is the combined rating.
inline double pooling_rating(std::span<const double> ratings,
                             std::span<const double> weights, double k) {
    detail::check_profile_weights(ratings, weights);
    detail::require_finite(k, "pooling constant");
    const double m = detail::max_weighted_rating(ratings, weights);
    double acc = 0.0;
    for (std::size_t i = 0; i < ratings.size(); ++i) {
        if (weights[i] > 0.0) {
            acc += weights[i] * std::exp((ratings[i] - m) * kLn10Over400);
        }
    }
    return m + std::log(acc) / kLn10Over400 + k;
}

// Everything one matchup induces: combined ratings, the combined-rating
// probability, per-format scores, endogenous weights, and (when a format
// distribution is supplied) the random-format lottery probability.
struct MatchupReport {
    RatingProfile profile_a;
    RatingProfile profile_b;
    std::vector<double> weights;
    double combined_a = 0.0;
    double combined_b = 0.0;
    std::vector<double> per_format_scores;
    double combined_probability = 0.0;
    std::vector<double> endogenous_weights;
    std::optional<double> lottery_probability;
    std::vector<double> lottery_distribution;  // empty unless pi was given
};

inline MatchupReport compute_matchup(const RatingProfile& a,
                                     const RatingProfile& b,
                                     std::span<const double> weights = {},
                                     std::span<const double> pi = {}) {
    validate_profile(a);
    validate_profile(b);
    if (a.labels != b.labels) {
        throw DimensionError("matchup profiles must share the same format labels");
    }
    MatchupReport report;
    report.profile_a = a;
    report.profile_b = b;
    report.weights = weights.empty()
                         ? std::vector<double>(a.ratings.size(), 1.0)
                         : std::vector<double>(weights.begin(), weights.end());
    report.combined_a = combined_rating(a.ratings, report.weights);
    report.combined_b = combined_rating(b.ratings, report.weights);
    auto decomposition =
        decompose_combined_probability(a.ratings, b.ratings, report.weights);
    report.per_format_scores = std::move(decomposition.per_format_scores);
    report.endogenous_weights = std::move(decomposition.weights);
    report.combined_probability =
        pairwise_probability(a.ratings, b.ratings, report.weights);
    if (!pi.empty()) {
        report.lottery_probability = lottery_probability(a.ratings, b.ratings, pi);
        report.lottery_distribution.assign(pi.begin(), pi.end());
    }
    return report;
}

} // namespace multielo
