#pragma once

#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multielo/aggregate.hpp"
#include "multielo/core.hpp"
#include "multielo/errors.hpp"
#include "multielo/profile.hpp"

namespace multielo {

// Conventional low-volatility update factor; callers may override per pool.
inline constexpr double kDefaultKFactor = 10.0;

namespace detail {

inline std::size_t role_index(const RatingProfile& profile, std::string_view role) {
    const auto idx = find_label(profile, role);
    if (!idx) {
        throw RoleError("unknown role: " + std::string(role));
    }
    return *idx;
}

inline void check_score(double score) {
    if (score != 0.0 && score != 0.5 && score != 1.0) {
        throw InvalidInputError("game score must be 0, 0.5, or 1");
    }
}

} // namespace detail

// Expected score of player a playing role_a against player b playing role_b,
// using only the two played role coordinates.
inline double role_expected_score(const RatingProfile& a, const RatingProfile& b,
                                  std::string_view role_a,
                                  std::string_view role_b) {
    validate_profile(a);
    validate_profile(b);
    return expected_score(a.ratings[detail::role_index(a, role_a)],
                          b.ratings[detail::role_index(b, role_b)]);
}

// Elo-style update after one game: only the played role coordinates move,
// by exactly opposite amounts K(s - E) and K(E - s). The score s is from
// the first player's point of view.
inline std::pair<RatingProfile, RatingProfile> role_update(
    const RatingProfile& a, const RatingProfile& b, std::string_view role_a,
    std::string_view role_b, double score, double k = kDefaultKFactor) {
    detail::check_score(score);
    if (!std::isfinite(k) || k <= 0.0) {
        throw InvalidInputError("update factor K must be positive and finite");
    }
    const double expected = role_expected_score(a, b, role_a, role_b);
    const double delta = k * (score - expected);
    std::pair<RatingProfile, RatingProfile> updated{a, b};
    updated.first.ratings[detail::role_index(a, role_a)] += delta;
    updated.second.ratings[detail::role_index(b, role_b)] -= delta;
    return updated;
}

// The displayed scalar rating is recomputed from the role coordinates by the
// combined-rating rule; it never feeds back into predictions or updates.
inline double role_display_rating(const RatingProfile& profile,
                                  std::span<const double> weights = {}) {
    validate_profile(profile);
    if (weights.empty()) {
        return combined_rating(profile.ratings);
    }
    return combined_rating(profile.ratings, weights);
}

} // namespace multielo
