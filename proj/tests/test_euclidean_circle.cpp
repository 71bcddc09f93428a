#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hadamard/circle.hpp"
#include "hadamard/euclidean.hpp"

using namespace hadamard;

constexpr double kPi = 3.14159265358979323846;

TEST_CASE("classical James-Stein hand values") {
    // n=3, sigma2=1, X=(2,0,0), psi=0: s = 1/4, result (1.5, 0, 0)
    auto r = classical_js({2.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, 1.0);
    REQUIRE(r.shrink_factor == Catch::Approx(0.25));
    REQUIRE(r.estimate[0] == Catch::Approx(1.5));
    REQUIRE(r.estimate[1] == 0.0);
    REQUIRE_FALSE(r.degenerate);

    // ||X-psi||^2 = sigma2 (n-2): s = 1, result = psi
    auto r2 = classical_js({1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, 1.0);
    REQUIRE(r2.shrink_factor == Catch::Approx(1.0));
    REQUIRE(r2.estimate[0] == Catch::Approx(0.0));

    // sigma2 -> 0: estimate -> X
    auto r3 = classical_js({2.0, 1.0, -1.0}, {0.0, 0.0, 0.0}, 1e-12);
    REQUIRE(r3.estimate[0] == Catch::Approx(2.0).margin(1e-10));

    // X = psi flags degenerate and returns psi
    auto r4 = classical_js({1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}, 1.0);
    REQUIRE(r4.degenerate);
    REQUIRE(r4.estimate[1] == 2.0);

    REQUIRE_THROWS_AS(classical_js({1.0, 2.0}, {0.0, 0.0}, 1.0), domain_error);
}

TEST_CASE("classical James-Stein translation equivariance") {
    EuclideanPoint X{2.0, -1.0, 0.5, 3.0}, psi{0.5, 0.0, 1.0, -1.0};
    EuclideanPoint c{10.0, -3.0, 2.0, 0.25};
    auto base = classical_js(X, psi, 1.7);
    EuclideanPoint Xc(4), psic(4);
    for (int i = 0; i < 4; ++i) {
        Xc[i] = X[i] + c[i];
        psic[i] = psi[i] + c[i];
    }
    auto shifted = classical_js(Xc, psic, 1.7);
    for (int i = 0; i < 4; ++i)
        REQUIRE(shifted.estimate[i] - c[i] == Catch::Approx(base.estimate[i]).margin(1e-12));
}

TEST_CASE("positive part clamps the weight") {
    // weight would exceed 1 -> returns psi
    auto r = positive_part_js({0.1, 0.0, 0.0}, {0.0, 0.0, 0.0}, 1.0);
    REQUIRE(r.shrink_factor == 1.0);
    REQUIRE(r.estimate[0] == Catch::Approx(0.0));

    // clamp inactive: identical to classical
    auto c = classical_js({2.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, 1.0);
    auto p = positive_part_js({2.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, 1.0);
    REQUIRE(p.estimate[0] == Catch::Approx(c.estimate[0]));

    auto deg = positive_part_js({1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}, 1.0);
    REQUIRE(deg.degenerate);
}

TEST_CASE("circle distance") {
    CirclePoint a = CirclePoint::from_angle(0.0);
    REQUIRE(circle_distance(a, CirclePoint::from_angle(kPi / 2)) ==
            Catch::Approx(kPi / 2));
    REQUIRE(circle_distance(a, CirclePoint::from_angle(3 * kPi / 2)) ==
            Catch::Approx(kPi / 2));
    REQUIRE(circle_distance(a, a) == 0.0);
}

TEST_CASE("circle interpolation follows the shorter arc") {
    CirclePoint zero = CirclePoint::from_angle(0.0);
    auto q = circle_interpolate(zero, CirclePoint::from_angle(kPi / 2), 0.5);
    REQUIRE(q.point.angle == Catch::Approx(kPi / 4));
    REQUIRE_FALSE(q.antipodal_tie);

    // (0, 3pi/2, 0.5) -> 7pi/4: the shorter arc is clockwise
    auto r = circle_interpolate(zero, CirclePoint::from_angle(3 * kPi / 2), 0.5);
    REQUIRE(r.point.angle == Catch::Approx(7 * kPi / 4));

    auto end = circle_interpolate(zero, CirclePoint::from_angle(2.1), 1.0);
    REQUIRE(end.point.angle == Catch::Approx(2.1));

    // exactly antipodal: tie broken counterclockwise and flagged
    auto tie = circle_interpolate(zero, CirclePoint::from_angle(kPi), 0.5);
    REQUIRE(tie.antipodal_tie);
    REQUIRE(tie.point.angle == Catch::Approx(kPi / 2));
}

TEST_CASE("circle angle canonicalization") {
    REQUIRE(CirclePoint::from_angle(-kPi / 2).angle == Catch::Approx(3 * kPi / 2));
    REQUIRE(CirclePoint::from_angle(2 * kPi).angle == Catch::Approx(0.0).margin(1e-15));
    REQUIRE(CirclePoint::from_angle(5 * kPi).angle == Catch::Approx(kPi));
}
