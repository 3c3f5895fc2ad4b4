#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "multielo/aggregate.hpp"
#include "multielo/errors.hpp"

namespace multielo {

// A named vector of Elo ratings, one per format (or role) coordinate.
struct RatingProfile {
    std::vector<std::string> labels;
    std::vector<double> ratings;
};

inline void validate_profile(const RatingProfile& profile) {
    detail::check_ratings(profile.ratings);
    if (profile.labels.size() != profile.ratings.size()) {
        throw DimensionError("profile has " + std::to_string(profile.labels.size()) +
                             " labels for " + std::to_string(profile.ratings.size()) +
                             " ratings");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& label : profile.labels) {
        if (label.empty()) {
            throw InvalidInputError("coordinate labels must be nonempty");
        }
        if (!seen.insert(label).second) {
            throw InvalidInputError("duplicate coordinate label: " + label);
        }
    }
}

inline std::optional<std::size_t> find_label(const RatingProfile& profile,
                                             std::string_view label) {
    for (std::size_t i = 0; i < profile.labels.size(); ++i) {
        if (profile.labels[i] == label) {
            return i;
        }
    }
    return std::nullopt;
}

} // namespace multielo
