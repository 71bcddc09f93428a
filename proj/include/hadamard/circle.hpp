#pragma once

#include <cmath>

#include "hadamard/tolerance.hpp"

namespace hadamard {

// Angle in [0, 2*pi), canonical representative.
struct CirclePoint {
    double angle = 0.0;

    static CirclePoint from_angle(double a) {
        constexpr double two_pi = 2.0 * 3.14159265358979323846;
        double r = std::fmod(a, two_pi);
        if (r < 0.0) r += two_pi;
        if (r >= two_pi) r = 0.0;
        return {r};
    }
};

struct CircleInterp {
    CirclePoint point;
    bool antipodal_tie = false;
};

// S^1 with the intrinsic angular metric. Positively curved, NOT Hadamard;
// present only for the shrinkage counterexample and excluded from CAT(0)
// property suites.
class CircleSpace {
  public:
    using point_type = CirclePoint;
    static constexpr bool is_hadamard = false;
    static constexpr double pi = 3.14159265358979323846;

    bool operator==(const CircleSpace&) const { return true; }

    double distance(const CirclePoint& a, const CirclePoint& b) const {
        double d = std::abs(a.angle - b.angle);
        return std::min(d, 2.0 * pi - d);
    }

    // Moves along the shorter arc from a toward b. Exactly antipodal inputs
    // break the tie counterclockwise from a (measure-zero event).
    CircleInterp interpolate_flagged(const CirclePoint& a, const CirclePoint& b,
                                     double t) const {
        require(t >= 0.0 && t <= 1.0, "t outside [0,1]");
        double diff = b.angle - a.angle;  // in (-2pi, 2pi)
        if (diff > pi) diff -= 2.0 * pi;
        if (diff < -pi) diff += 2.0 * pi;
        bool tie = false;
        if (diff == -pi) {  // antipodal: fmod put it at -pi; go counterclockwise
            diff = pi;
            tie = true;
        } else if (diff == pi) {
            tie = true;
        }
        return {CirclePoint::from_angle(a.angle + t * diff), tie};
    }

    CirclePoint interpolate(const CirclePoint& a, const CirclePoint& b, double t) const {
        return interpolate_flagged(a, b, t).point;
    }

    bool points_equal(const CirclePoint& a, const CirclePoint& b, double tol) const {
        return distance(a, b) <= tol;
    }
};

inline double circle_distance(const CirclePoint& a, const CirclePoint& b) {
    return CircleSpace{}.distance(a, b);
}

inline CircleInterp circle_interpolate(const CirclePoint& a, const CirclePoint& b,
                                       double t) {
    return CircleSpace{}.interpolate_flagged(a, b, t);
}

}  // namespace hadamard
