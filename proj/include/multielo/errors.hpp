#pragma once

#include <stdexcept>

namespace multielo {

// Non-finite rating, non-positive strength, or otherwise out-of-domain value.
struct InvalidInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Profiles, weights, or distributions whose lengths do not line up.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Weight vector with a negative or non-finite entry, or no positive entry.
struct InvalidWeightsError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Blocks that do not form an ordered partition of the coordinate indices.
struct PartitionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Format-selection probabilities that are not a probability vector.
struct InvalidDistributionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Role label not present in a profile.
struct RoleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A probed rule whose responses are not consistent with any weighted
// strength average.
struct NotRepresentableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite-difference probing broke down (non-finite or non-increasing rule).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file; the message carries the offending line or record.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two records with the same player name.
struct DuplicateNameError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace multielo
