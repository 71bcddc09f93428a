#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hadamard/euclidean.hpp"
#include "hadamard/rng.hpp"
#include "hadamard/samplers.hpp"
#include "hadamard/shrinkage.hpp"
#include "hadamard/spd.hpp"
#include "hadamard/tree.hpp"

using namespace hadamard;

TEST_CASE("js weight") {
    REQUIRE(js_weight(1.0, 4.0) == Catch::Approx(0.25));
    REQUIRE(js_weight(1.0, 0.5) == 1.0);
    REQUIRE(js_weight(0.0, 3.0) == 0.0);
    REQUIRE(js_weight(2.0, 0.0) == 1.0);
    REQUIRE_THROWS_AS(js_weight(-1.0, 1.0), domain_error);

    // monotone: nonincreasing in dist2, nondecreasing in sigma2
    double prev = 1.0;
    for (double d2 : {0.5, 1.0, 2.0, 5.0, 50.0}) {
        double w = js_weight(1.0, d2);
        REQUIRE(w <= prev + 1e-15);
        prev = w;
    }
    prev = 0.0;
    for (double s2 : {0.1, 0.5, 2.0, 10.0}) {
        double w = js_weight(s2, 3.0);
        REQUIRE(w >= prev - 1e-15);
        prev = w;
    }
}

TEST_CASE("alpha scaled weight") {
    REQUIRE(alpha_scaled_weight(0.5, 4.0) == Catch::Approx(0.125));
    REQUIRE(alpha_scaled_weight(5.0, 4.0) == 1.0);
    // alpha0 = sigma2 reduces to the James-Stein weight
    REQUIRE(alpha_scaled_weight(1.3, 7.0) == Catch::Approx(js_weight(1.3, 7.0)));
}

TEST_CASE("oracle weight") {
    // Hilbert identity rho_x^2 = rho_theta^2 + sigma2 -> sigma2 / rho_x^2
    REQUIRE(oracle_weight(1.0, 5.0, 4.0).value == Catch::Approx(1.0 / 5.0));
    // rho_theta = 0, rho_x = sigma2 -> 1
    REQUIRE(oracle_weight(2.0, 2.0, 0.0).value == Catch::Approx(1.0));
    // no noise, no shrinkage
    REQUIRE(oracle_weight(0.0, 3.0, 3.0).value == 0.0);
    auto deg = oracle_weight(1.0, 0.0, 0.0);
    REQUIRE(deg.degenerate);
    REQUIRE(deg.value == 1.0);
}

TEST_CASE("geodesic js on euclidean groups") {
    EuclideanSpace e1(1);
    ProductSpace<EuclideanSpace> p3(3, e1);
    using Spec = ShrinkageSpec<EuclideanPoint>;

    // X = (2,0,0) per coordinate group, psi = 0: w = min(1, 3/4)
    std::vector<EuclideanPoint> X{{2.0}, {0.0}, {0.0}};
    auto est = geodesic_js(p3, X, Spec::fixed({{0.0}}, {1.0, 1.0, 1.0}));
    REQUIRE(est.weight_applied == Catch::Approx(0.75));
    REQUIRE(est.points[0][0] == Catch::Approx(0.5));  // X/4
    REQUIRE(est.points[1][0] == 0.0);

    // w = 1 -> output is psi
    std::vector<EuclideanPoint> tightX{{0.1}, {0.0}, {0.0}};
    auto full = geodesic_js(p3, tightX, Spec::fixed({{0.0}}, {1.0, 1.0, 1.0}));
    REQUIRE(full.weight_applied == 1.0);
    REQUIRE(full.points[0][0] == 0.0);

    // vanishing shrinkage when distances dwarf the variance
    std::vector<EuclideanPoint> farX{{2000.0}, {0.0}, {0.0}};
    auto tiny = geodesic_js(p3, farX, Spec::fixed({{0.0}}, {1e-6, 1e-6, 1e-6}));
    REQUIRE(std::abs(tiny.points[0][0] - 2000.0) < 1e-6 * 2000.0);
}

TEST_CASE("geodesic js output stays on the X->psi geodesic") {
    RngStream s = make_stream(41, "geodiag");
    SpdSpace spd(3);
    ProductSpace<SpdSpace> p4(4, spd);
    using Spec = ShrinkageSpec<SpdPoint>;
    std::vector<SpdPoint> X, psi;
    for (int i = 0; i < 4; ++i) {
        X.push_back(sample_wishart(SpdPoint::identity(3), 5, s));
        psi.push_back(sample_wishart(SpdPoint::identity(3), 5, s));
    }
    auto est = geodesic_js(p4, X, Spec::fixed(psi, {1.0, 2.0, 0.5, 1.5}));
    double dxp = p4.distance(X, psi);
    double d1 = p4.distance(X, est.points);
    double d2 = p4.distance(est.points, psi);
    REQUIRE(d1 + d2 == Catch::Approx(dxp).margin(1e-9));
}

TEST_CASE("euclidean geodesic js equals positive-part after rescaling") {
    // coordinates as groups: geodesic_js weight uses n sigma2 / ||X-psi||^2;
    // positive-part uses (n-2) sigma2 / ||X-psi||^2. Rescaling sigma2 by
    // (n-2)/n makes them identical.
    RngStream s = make_stream(42, "jsvs");
    const int n = 6;
    EuclideanSpace e1(1);
    ProductSpace<EuclideanSpace> pn(n, e1);
    using Spec = ShrinkageSpec<EuclideanPoint>;
    for (int trial = 0; trial < 50; ++trial) {
        EuclideanPoint Xflat(n), psiflat(n);
        std::vector<EuclideanPoint> X, psi;
        for (int i = 0; i < n; ++i) {
            Xflat[i] = 3.0 * s.next_gaussian();
            psiflat[i] = s.next_gaussian();
            X.push_back({Xflat[i]});
            psi.push_back({psiflat[i]});
        }
        double sigma2 = 0.5 + s.next_double();
        double scaled = sigma2 * double(n - 2) / double(n);
        auto gj = geodesic_js(pn, X, Spec::fixed(psi, std::vector<double>(n, scaled)));
        auto pp = positive_part_js(Xflat, psiflat, sigma2);
        for (int i = 0; i < n; ++i)
            REQUIRE(gj.points[i][0] == Catch::Approx(pp.estimate[i]).margin(1e-12));
    }
}

TEST_CASE("adaptive shrink point is the sample frechet mean") {
    EuclideanSpace e2(2);
    ProductSpace<EuclideanSpace> p3(3, e2);
    std::vector<EuclideanPoint> X{{0.0, 3.0}, {3.0, 0.0}, {0.0, 0.0}};
    auto mean = adaptive_shrink_point(p3, X);
    REQUIRE(mean[0] == Catch::Approx(1.0));
    REQUIRE(mean[1] == Catch::Approx(1.0));

    // all equal -> that point
    std::vector<EuclideanPoint> same{{1.0, 2.0}, {1.0, 2.0}, {1.0, 2.0}};
    auto m2 = adaptive_shrink_point(p3, same);
    REQUIRE(m2[0] == 1.0);
    REQUIRE(m2[1] == 2.0);

    // two points on a tree -> geodesic midpoint
    WeightedTree tri(4, {{0, 1, 1.0}, {0, 2, 2.0}, {0, 3, 1.0}});
    TreeSpace ts(tri);
    ProductSpace<TreeSpace> p2(2, ts);
    std::vector<TreePoint> tx{TreePoint::at_vertex(1), TreePoint::at_vertex(2)};
    auto tm = adaptive_shrink_point(p2, tx);
    REQUIRE(tree_distance(tri, tm, TreePoint::at_vertex(1)) == Catch::Approx(1.5));
    REQUIRE(tree_distance(tri, tm, TreePoint::at_vertex(2)) == Catch::Approx(1.5));

    // heterogeneous component spaces are rejected
    ProductSpace<EuclideanSpace> mixed({EuclideanSpace(2), EuclideanSpace(3)});
    std::vector<EuclideanPoint> bad{{0.0, 0.0}, {0.0, 0.0, 0.0}};
    REQUIRE_THROWS_AS(adaptive_shrink_point(mixed, bad), domain_error);
}

TEST_CASE("loss certificates bound the realized loss") {
    RngStream s = make_stream(43, "cert");
    EuclideanSpace e1(1);
    const int n = 5;
    ProductSpace<EuclideanSpace> pn(n, e1);
    using Spec = ShrinkageSpec<EuclideanPoint>;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<EuclideanPoint> X, psi, theta;
        for (int i = 0; i < n; ++i) {
            theta.push_back({s.next_gaussian()});
            psi.push_back({0.5 * s.next_gaussian()});
            X.push_back({theta[i][0] + s.next_gaussian()});
        }
        auto est = geodesic_js(pn, X, Spec::fixed(psi, std::vector<double>(n, 1.0)));
        double loss = [&] {
            double d = pn.distance(theta, est.points);
            return d * d;
        }();
        double dxt = pn.distance(X, theta);
        double dtp = pn.distance(theta, est.resolved_psi);
        double dxp = pn.distance(X, est.resolved_psi);
        double raw = cat0_loss_bound(est.weight_applied, dxt * dxt, dtp * dtp, dxp * dxp);
        double abc = js_loss_certificate(est.weight_applied, dxt * dxt, est.sigma2,
                                         dtp * dtp);
        REQUIRE(loss <= raw + 1e-9);
        REQUIRE(loss <= abc + 1e-9);
        REQUIRE(raw <= abc + 1e-9);
    }
}
