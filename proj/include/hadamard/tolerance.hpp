#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace hadamard {

// Error type for contract violations (empty data, domain errors, mismatched spaces).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Tolerance policy: absolute below unit scale, relative above.
struct Tolerance {
    double eps = 1e-9;

    bool close(double a, double b) const {
        double scale = std::max({1.0, std::abs(a), std::abs(b)});
        return std::abs(a - b) <= eps * scale;
    }
    // |value| <= eps at the given scale
    bool near_zero(double value, double scale = 1.0) const {
        return std::abs(value) <= eps * std::max(1.0, std::abs(scale));
    }
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw domain_error(what);
}

}  // namespace hadamard
