#pragma once

#include <stdexcept>
#include <string>

namespace partosc {

// Requested table size exceeds the configured memory budget.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// An angle coincides with a regime boundary (theta13 or theta23), where the
// case split of the asymptotic formulas is undefined.
struct boundary_error : std::runtime_error {
    explicit boundary_error(const std::string& what) : std::runtime_error(what) {}
};

// A root finder was handed an interval without a sign change.
struct bracket_error : std::runtime_error {
    explicit bracket_error(const std::string& what) : std::runtime_error(what) {}
};

// A factor of an omega product vanishes while its exponent is negative.
struct singular_factor_error : std::runtime_error {
    explicit singular_factor_error(const std::string& what, int factor_index)
        : std::runtime_error(what), j(factor_index) {}
    int j;  // the offending factor index
};

}  // namespace partosc
