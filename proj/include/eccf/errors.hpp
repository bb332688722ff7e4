#pragma once

#include <stdexcept>
#include <string>

namespace eccf {

/// Unreadable or malformed input data beyond the tolerated per-row skips.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested a statistic for a user with no ratings.
struct ColdStartError : std::runtime_error {
    explicit ColdStartError(const std::string& what) : std::runtime_error(what) {}
};

/// Model training failed (e.g. parameters became non-finite).
struct TrainingError : std::runtime_error {
    explicit TrainingError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace eccf
