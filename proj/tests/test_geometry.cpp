#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hadamard/euclidean.hpp"
#include "hadamard/geometry.hpp"
#include "hadamard/product.hpp"
#include "hadamard/tree.hpp"

using namespace hadamard;

namespace {

// Appendix-style tripod: center 0, A=1 (arm 1), B=2 (arm 2), C=3 (arm 1)
WeightedTree tripod() {
    return WeightedTree(4, {{0, 1, 1.0}, {0, 2, 2.0}, {0, 3, 1.0}});
}

}  // namespace

TEST_CASE("product distance is the 1/n-normalized rms") {
    EuclideanSpace e1(1);
    ProductSpace<EuclideanSpace> p1(1, e1);
    REQUIRE(p1.distance({{0.0}}, {{5.0}}) == Catch::Approx(5.0));

    ProductSpace<EuclideanSpace> p2(2, e1);
    // component distances 3 and 4 -> sqrt((9+16)/2)
    double d = p2.distance({{0.0}, {0.0}}, {{3.0}, {4.0}});
    REQUIRE(d == Catch::Approx(std::sqrt(12.5)));

    REQUIRE(p2.distance({{1.0}, {2.0}}, {{1.0}, {2.0}}) == 0.0);
    REQUIRE_THROWS_AS(p2.distance({{0.0}}, {{1.0}, {2.0}}), domain_error);
}

TEST_CASE("product interpolation is componentwise") {
    EuclideanSpace e1(1);
    ProductSpace<EuclideanSpace> p2(2, e1);
    ProductSpace<EuclideanSpace>::point_type a{{0.0}, {0.0}}, b{{2.0}, {4.0}};
    auto q = p2.interpolate(a, b, 0.25);
    REQUIRE(q[0][0] == Catch::Approx(0.5));
    REQUIRE(q[1][0] == Catch::Approx(1.0));
    REQUIRE(p2.points_equal(p2.interpolate(a, b, 0.0), a, 1e-12));
    REQUIRE(p2.points_equal(p2.interpolate(a, b, 1.0), b, 1e-12));
    REQUIRE_THROWS_AS(p2.interpolate(a, b, 1.5), domain_error);
}

TEST_CASE("frechet functional values") {
    EuclideanSpace e1(1);
    WeightedDataset<EuclideanPoint> single({{2.0}});
    REQUIRE(frechet_functional(e1, single, {2.0}) == 0.0);

    WeightedDataset<EuclideanPoint> two({{0.0}, {2.0}});
    REQUIRE(frechet_functional(e1, two, {1.0}) == Catch::Approx(2.0));

    WeightedDataset<EuclideanPoint> empty;
    REQUIRE_THROWS_AS(frechet_functional(e1, empty, {0.0}), domain_error);

    // tripod vertices vs central vertex: 1 + 4 + 1
    WeightedTree t = tripod();
    TreeSpace ts(t);
    WeightedDataset<TreePoint> abc({TreePoint::at_vertex(1), TreePoint::at_vertex(2),
                                    TreePoint::at_vertex(3)});
    REQUIRE(frechet_functional(ts, abc, TreePoint::at_vertex(0)) == Catch::Approx(6.0));
}

TEST_CASE("brute force frechet mean") {
    EuclideanSpace e1(1);
    WeightedDataset<EuclideanPoint> two({{0.0}, {2.0}});
    std::vector<EuclideanPoint> grid;
    for (double x = -1.0; x <= 3.0; x += 0.01) grid.push_back({x});
    auto [pt, val] = brute_force_frechet_mean(e1, two, grid);
    REQUIRE(pt[0] == Catch::Approx(1.0).margin(0.011));

    // oracle value never exceeds the functional at any candidate
    for (const auto& c : grid)
        REQUIRE(val <= frechet_functional(e1, two, c) + 1e-12);

    WeightedDataset<EuclideanPoint> one({{0.5}});
    auto [p1, v1] = brute_force_frechet_mean(e1, one, {{0.5}, {1.0}});
    REQUIRE(p1[0] == 0.5);
    REQUIRE(v1 == 0.0);

    REQUIRE_THROWS_AS(brute_force_frechet_mean(e1, two, {}), domain_error);

    // tripod: fine grid finds the central vertex
    WeightedTree t = tripod();
    TreeSpace ts(t);
    WeightedDataset<TreePoint> abc({TreePoint::at_vertex(1), TreePoint::at_vertex(2),
                                    TreePoint::at_vertex(3)});
    auto cands = tree_grid_candidates(t, 1e-3);
    auto [mp, mv] = brute_force_frechet_mean(ts, abc, cands);
    REQUIRE(ts.distance(mp, TreePoint::at_vertex(0)) < 1.5e-3);
}

TEST_CASE("cat0 slack on flat and tripod triples") {
    EuclideanSpace e2(2);
    REQUIRE(std::abs(cat0_slack(e2, {0.0, 0.0}, {3.0, 1.0}, {1.0, 4.0}, 0.5)) < 1e-10);

    // tripod x=A, y=C, z=B, t=1/2: midpoint of [A,C] is the center, d(center,B)=2
    // slack = .5*9 + .5*9 - .25*4 - 4 = 4
    WeightedTree t = tripod();
    TreeSpace ts(t);
    double slack = cat0_slack(ts, TreePoint::at_vertex(1), TreePoint::at_vertex(3),
                              TreePoint::at_vertex(2), 0.5);
    REQUIRE(slack == Catch::Approx(4.0));
    REQUIRE(slack > 0.0);
}

TEST_CASE("discrete conditional frechet mean") {
    EuclideanSpace e1(1);
    std::vector<EuclideanPoint> grid;
    for (double x = 0.0; x <= 2.0; x += 1e-3) grid.push_back({x});

    auto point_mass = conditional_frechet_mean_discrete(e1, {{0.7}}, {1.0}, grid);
    REQUIRE(point_mass[0] == Catch::Approx(0.7).margin(1.1e-3));

    auto half = conditional_frechet_mean_discrete(e1, {{0.0}, {2.0}}, {0.5, 0.5}, grid);
    REQUIRE(half[0] == Catch::Approx(1.0).margin(1.1e-3));

    // tripod law {center: 2/3, B: 1/3} -> 2/3 of the way toward B
    WeightedTree t = tripod();
    TreeSpace ts(t);
    auto cands = tree_grid_candidates(t, 1e-4);
    auto m = conditional_frechet_mean_discrete(
        ts, {TreePoint::at_vertex(0), TreePoint::at_vertex(2)},
        {2.0 / 3.0, 1.0 / 3.0}, cands);
    REQUIRE(ts.distance(m, TreePoint::at_vertex(0)) == Catch::Approx(2.0 / 3.0).margin(2e-4));

    REQUIRE_THROWS_AS(conditional_frechet_mean_discrete(
                          e1, {{0.0}, {1.0}}, {1.1, -0.1}, grid),
                      domain_error);  // sums to 1 but has a negative entry
    REQUIRE_THROWS_AS(conditional_frechet_mean_discrete(e1, {{0.0}}, {0.5}, grid),
                      domain_error);
}

TEST_CASE("geodesic reparameterization") {
    EuclideanSpace e3(3);
    EuclideanPoint x{0.0, 1.0, -2.0}, y{4.0, -1.0, 0.5};
    for (double s : {0.3, 0.7}) {
        for (double t : {0.2, 0.9}) {
            auto direct = e3.interpolate(x, y, s * t);
            auto nested = e3.interpolate(x, e3.interpolate(x, y, t), s);
            REQUIRE(e3.distance(direct, nested) < 1e-12);
        }
    }
}
