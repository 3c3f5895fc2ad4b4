#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "multielo/core.hpp"
#include "multielo/errors.hpp"

namespace multielo {

// Ordered partition of the coordinate indices {0..n-1} into nonempty blocks.
using Partition = std::vector<std::vector<std::size_t>>;

namespace detail {

inline void check_ratings(std::span<const double> ratings) {
    if (ratings.empty()) {
        throw DimensionError("rating profile must have at least one coordinate");
    }
    for (double r : ratings) {
        require_finite(r, "rating");
    }
}

// Weights must be finite, non-negative, and not all zero. A zero weight
// drops its coordinate from every aggregate (the limit semantics).
inline void check_weights(std::span<const double> weights) {
    if (weights.empty()) {
        throw InvalidWeightsError("weight vector must have at least one entry");
    }
    bool any_positive = false;
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0) {
            throw InvalidWeightsError("weights must be finite and non-negative");
        }
        if (w > 0.0) {
            any_positive = true;
        }
    }
    if (!any_positive) {
        throw InvalidWeightsError("at least one weight must be positive");
    }
}

inline void check_profile_weights(std::span<const double> ratings,
                                  std::span<const double> weights) {
    check_ratings(ratings);
    check_weights(weights);
    if (ratings.size() != weights.size()) {
        throw DimensionError("profile has " + std::to_string(ratings.size()) +
                             " coordinates but " + std::to_string(weights.size()) +
                             " weights were given");
    }
}

// Largest rating that actually carries weight; the log-sum-exp shift point.
inline double max_weighted_rating(std::span<const double> ratings,
                                  std::span<const double> weights) {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < ratings.size(); ++i) {
        if (weights[i] > 0.0) {
            m = std::max(m, ratings[i]);
        }
    }
    return m;
}

} // namespace detail

// Weighted arithmetic mean of per-coordinate Elo strengths,
// sum(w_i q(R_i)) / sum(w_i). Zero-weight coordinates contribute nothing.
inline double combined_strength(std::span<const double> ratings,
                                std::span<const double> weights) {
    detail::check_profile_weights(ratings, weights);
    double acc = 0.0;
    double wsum = 0.0;
    for (std::size_t i = 0; i < ratings.size(); ++i) {
        wsum += weights[i];
        if (weights[i] > 0.0) {
            acc += weights[i] * std::exp(ratings[i] * kLn10Over400);
        }
    }
    return acc / wsum;
}

// The combined rating: per-coordinate ratings to strengths, weighted mean,
// back to the rating scale. Computed in shifted log-sum-exp form,
//   m + 400 log10(sum(w_i 10^((R_i - m)/400)) / sum(w_i)),  m = max weighted R_i,
// so extreme profiles cannot overflow and uniform profiles return their
// common rating exactly.
inline double combined_rating(std::span<const double> ratings,
                              std::span<const double> weights) {
    detail::check_profile_weights(ratings, weights);
    const double m = detail::max_weighted_rating(ratings, weights);
    double acc = 0.0;
    double wsum = 0.0;
    for (std::size_t i = 0; i < ratings.size(); ++i) {
        wsum += weights[i];
        if (weights[i] > 0.0) {
            acc += weights[i] * std::exp((ratings[i] - m) * kLn10Over400);
        }
    }
    return m + std::log(acc / wsum) / kLn10Over400;
}

// Equal-weight convenience overloads (the default weighting convention).
inline double combined_strength(std::span<const double> ratings) {
    return combined_strength(ratings, std::vector<double>(ratings.size(), 1.0));
}

inline double combined_rating(std::span<const double> ratings) {
    return combined_rating(ratings, std::vector<double>(ratings.size(), 1.0));
}

// Marginal influence of each coordinate on the combined rating:
// entry j is w_j q(R_j) / sum(w_i q(R_i)). Entries sum to one.
inline std::vector<double> marginal_weights(std::span<const double> ratings,
                                            std::span<const double> weights) {
    detail::check_profile_weights(ratings, weights);
    const double m = detail::max_weighted_rating(ratings, weights);
    std::vector<double> out(ratings.size(), 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < ratings.size(); ++i) {
        if (weights[i] > 0.0) {
            out[i] = weights[i] * std::exp((ratings[i] - m) * kLn10Over400);
            total += out[i];
        }
    }
    for (double& v : out) {
        v /= total;
    }
    return out;
}

// Scale weights to sum to one. The combined rating is invariant under this.
inline std::vector<double> normalize_weights(std::span<const double> weights) {
    detail::check_weights(weights);
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    std::vector<double> out(weights.begin(), weights.end());
    for (double& w : out) {
        w /= total;
    }
    return out;
}

inline void validate_partition(const Partition& blocks, std::size_t n) {
    if (blocks.empty()) {
        throw PartitionError("partition must have at least one block");
    }
    std::vector<bool> seen(n, false);
    std::size_t covered = 0;
    for (const auto& block : blocks) {
        if (block.empty()) {
            throw PartitionError("partition blocks must be nonempty");
        }
        for (std::size_t idx : block) {
            if (idx >= n) {
                throw PartitionError("partition index " + std::to_string(idx) +
                                     " out of range for " + std::to_string(n) +
                                     " coordinates");
            }
            if (seen[idx]) {
                throw PartitionError("partition blocks overlap at index " +
                                     std::to_string(idx));
            }
            seen[idx] = true;
            ++covered;
        }
    }
    if (covered != n) {
        throw PartitionError("partition does not cover all coordinates");
    }
}

// Aggregate each block with its inherited weights, then aggregate the block
// ratings using block total weights. For the combined-rating rule this equals
// direct aggregation; blocks whose total weight is zero drop out.
inline double recursive_aggregate(std::span<const double> ratings,
                                  std::span<const double> weights,
                                  const Partition& blocks) {
    detail::check_profile_weights(ratings, weights);
    validate_partition(blocks, ratings.size());
    std::vector<double> block_ratings;
    std::vector<double> block_weights;
    block_ratings.reserve(blocks.size());
    block_weights.reserve(blocks.size());
    std::vector<double> sub_r;
    std::vector<double> sub_w;
    for (const auto& block : blocks) {
        sub_r.clear();
        sub_w.clear();
        double total = 0.0;
        for (std::size_t idx : block) {
            sub_r.push_back(ratings[idx]);
            sub_w.push_back(weights[idx]);
            total += weights[idx];
        }
        if (total <= 0.0) {
            continue;
        }
        block_ratings.push_back(combined_rating(sub_r, sub_w));
        block_weights.push_back(total);
    }
    return combined_rating(block_ratings, block_weights);
}

// recover_weights probes a black-box rule at the one-hot profiles
// (0,...,0,probe,0,...,0). For a normalized strength average,
//   q(C(probe * e_i)) = w_i q(probe) + (1 - w_i),
// which identifies each weight. The probe rating 400 gives q = 10, so the
// probes are well conditioned. Responses that no strength average can
// reproduce (sum of recovered weights off one, or a pairwise probe
// mismatch) raise NotRepresentableError.
inline constexpr double kRecoverProbeRating = 400.0;
inline constexpr double kRecoverTolerance = 1e-6;

template <typename Rule>
std::vector<double> recover_weights(Rule&& rule, std::size_t n) {
    if (n == 0) {
        throw DimensionError("rule must have at least one coordinate");
    }
    const double probe_q = strength(kRecoverProbeRating);
    std::vector<double> profile(n, 0.0);
    std::vector<double> recovered(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        profile[i] = kRecoverProbeRating;
        recovered[i] = (strength(rule(std::span<const double>(profile))) - 1.0) /
                       (probe_q - 1.0);
        profile[i] = 0.0;
    }
    const double sum = std::accumulate(recovered.begin(), recovered.end(), 0.0);
    if (std::abs(sum - 1.0) > kRecoverTolerance) {
        throw NotRepresentableError(
            "probe weights sum to " + std::to_string(sum) +
            "; rule is not a normalized strength average");
    }
    for (double w : recovered) {
        if (!(w > 0.0)) {
            throw NotRepresentableError(
                "probe produced a non-positive weight; rule is not a "
                "positive-weight strength average");
        }
    }
    // Cross-check the recovered weights on two-hot probes and the uniform
    // probe; a genuine strength average reproduces all of them.
    const std::vector<double> uniform_profile(n, kRecoverProbeRating);
    const double uniform = rule(std::span<const double>(uniform_profile));
    if (std::abs(uniform - kRecoverProbeRating) > kRecoverTolerance) {
        throw NotRepresentableError("rule does not map uniform profiles to "
                                    "their common rating");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            profile[i] = kRecoverProbeRating;
            profile[j] = kRecoverProbeRating;
            const double observed = rule(std::span<const double>(profile));
            profile[i] = 0.0;
            profile[j] = 0.0;
            const double predicted = rating_from_strength(
                (recovered[i] + recovered[j]) * probe_q +
                (1.0 - recovered[i] - recovered[j]));
            if (std::abs(observed - predicted) > kRecoverTolerance) {
                throw NotRepresentableError(
                    "pairwise probe deviates from the strength-average form");
            }
        }
    }
    return recovered;
}

} // namespace multielo
