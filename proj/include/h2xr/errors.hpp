#pragma once

#include <stdexcept>
#include <string>

namespace h2xr {

struct InvalidPointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonHyperbolicError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NoConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a candidate configuration places two orbit balls closer than
// one diameter. Carries the offending word.
struct OverlapError : std::runtime_error {
    std::string word;
    double distance;
    OverlapError(std::string w, double d)
        : std::runtime_error("overlapping configuration at word '" + w + "', distance " + std::to_string(d)),
          word(std::move(w)),
          distance(d) {}
};

struct UnsolvedCaseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace h2xr
