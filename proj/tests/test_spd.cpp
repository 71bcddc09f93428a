#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hadamard/jacobi.hpp"
#include "hadamard/rng.hpp"
#include "hadamard/samplers.hpp"
#include "hadamard/spd.hpp"

using namespace hadamard;

namespace {

Mat random_sym(int k, RngStream& s, double scale = 1.0) {
    Mat m(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= i; ++j) {
            double v = scale * s.next_gaussian();
            m(i, j) = v;
            m(j, i) = v;
        }
    return m;
}

SpdPoint random_spd(int k, RngStream& s) {
    return sample_wishart(SpdPoint::identity(k), k + 2, s);
}

}  // namespace

TEST_CASE("jacobi eigen on simple matrices") {
    auto id = sym_eigen(Mat::identity(3));
    for (double v : id.values) REQUIRE(v == Catch::Approx(1.0));

    auto d = sym_eigen(Mat::diag({4.0, 1.0}));
    REQUIRE(d.values[0] == Catch::Approx(4.0));
    REQUIRE(d.values[1] == Catch::Approx(1.0));
    REQUIRE(std::abs(d.vectors(0, 0)) == Catch::Approx(1.0));
    REQUIRE(std::abs(d.vectors(1, 1)) == Catch::Approx(1.0));

    Mat bad(2, {0.0, 1.0, -1.0, 0.0});
    REQUIRE_THROWS_AS(sym_eigen(bad), domain_error);
}

TEST_CASE("jacobi eigen reconstruction and orthonormality") {
    RngStream s = make_stream(11, "jacobi");
    for (int trial = 0; trial < 50; ++trial) {
        int k = 2 + static_cast<int>(s.next_below(5));
        Mat m = random_sym(k, s, 2.0);
        EigenSys es = sym_eigen(m);
        // descending order
        for (int i = 1; i < k; ++i) REQUIRE(es.values[i - 1] >= es.values[i] - 1e-12);
        // U Lambda U^T == M
        Mat rec = spectral_map(es, [](double v) { return v; });
        REQUIRE(frobenius_distance(rec, m) <= 1e-10 * (1.0 + m.frobenius()));
        // U^T U == I
        Mat vtv = matmul(transpose(es.vectors), es.vectors);
        REQUIRE(frobenius_distance(vtv, Mat::identity(k)) < 1e-10);
    }
}

TEST_CASE("spd log and exp") {
    auto I3 = SpdPoint::identity(3);
    REQUIRE(I3.log().frobenius() == Catch::Approx(0.0).margin(1e-14));

    auto e_diag = SpdPoint::from_matrix(Mat::diag({std::exp(1.0), 1.0, 1.0}));
    REQUIRE(e_diag.log()(0, 0) == Catch::Approx(1.0));
    REQUIRE(e_diag.log()(1, 1) == Catch::Approx(0.0).margin(1e-14));

    RngStream s = make_stream(12, "roundtrip");
    for (int trial = 0; trial < 30; ++trial) {
        SpdPoint a = random_spd(3, s);
        SpdPoint back = spd_exp(spd_log(a));
        REQUIRE(frobenius_distance(back.matrix(), a.matrix()) <=
                1e-9 * (1.0 + a.matrix().frobenius()));
    }

    Mat negative = Mat::diag({1.0, -0.5});
    REQUIRE_THROWS_AS(SpdPoint::from_matrix(negative), domain_error);
    Mat tiny = Mat::diag({1.0, 1e-14});
    REQUIRE_THROWS_AS(SpdPoint::from_matrix(tiny), domain_error);
}

TEST_CASE("spd distance") {
    auto I3 = SpdPoint::identity(3);
    REQUIRE(spd_distance(I3, I3) == 0.0);
    auto b = SpdPoint::from_matrix(Mat::diag({std::exp(2.0), 1.0, 1.0}));
    REQUIRE(spd_distance(I3, b) == Catch::Approx(2.0));

    RngStream s = make_stream(13, "symm");
    for (int trial = 0; trial < 20; ++trial) {
        SpdPoint x = random_spd(3, s), y = random_spd(3, s);
        REQUIRE(spd_distance(x, y) == Catch::Approx(spd_distance(y, x)).margin(1e-12));
    }
}

TEST_CASE("spd interpolation") {
    auto I3 = SpdPoint::identity(3);
    auto b = SpdPoint::from_matrix(Mat::diag({std::exp(2.0), 1.0, 1.0}));
    auto mid = spd_interpolate(I3, b, 0.5);
    REQUIRE(mid.matrix()(0, 0) == Catch::Approx(std::exp(1.0)));
    REQUIRE(mid.matrix()(1, 1) == Catch::Approx(1.0));

    auto at0 = spd_interpolate(I3, b, 0.0);
    REQUIRE(frobenius_distance(at0.matrix(), I3.matrix()) < 1e-12);

    RngStream s = make_stream(14, "speed");
    for (int trial = 0; trial < 20; ++trial) {
        SpdPoint x = random_spd(3, s), y = random_spd(3, s);
        double d = spd_distance(x, y);
        for (double t : {0.25, 0.6}) {
            REQUIRE(spd_distance(x, spd_interpolate(x, y, t)) ==
                    Catch::Approx(t * d).margin(1e-9 * (1.0 + d)));
        }
    }
}

TEST_CASE("spd frechet mean closed form") {
    auto I3 = SpdPoint::identity(3);
    auto b = SpdPoint::from_matrix(Mat::diag({std::exp(2.0), 1.0, 1.0}));
    auto xbar = spd_frechet_mean({I3, b});
    REQUIRE(xbar.matrix()(0, 0) == Catch::Approx(std::exp(1.0)));

    auto same = spd_frechet_mean({b, b, b});
    REQUIRE(frobenius_distance(same.matrix(), b.matrix()) < 1e-10);
}

TEST_CASE("spd frechet mean minimizes the functional against perturbations") {
    RngStream s = make_stream(15, "meanopt");
    SpdSpace space(3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<SpdPoint> data;
        for (int i = 0; i < 3; ++i) data.push_back(random_spd(3, s));
        SpdPoint mean = spd_frechet_mean(data);
        double f0 = 0.0;
        for (const auto& x : data) {
            double d = spd_distance(x, mean);
            f0 += d * d;
        }
        // perturb the log by small random symmetric bumps
        for (int p = 0; p < 10; ++p) {
            Mat bump = random_sym(3, s, 0.05);
            Mat lg = mean.log();
            lg += bump;
            SpdPoint cand = spd_exp(SymMatrix{lg});
            double f = 0.0;
            for (const auto& x : data) {
                double d = spd_distance(x, cand);
                f += d * d;
            }
            REQUIRE(f0 <= f + 1e-9);
        }
    }
}

TEST_CASE("congruence invariance under orthogonal conjugation") {
    RngStream s = make_stream(16, "congruence");
    for (int trial = 0; trial < 20; ++trial) {
        SpdPoint a = random_spd(3, s), b = random_spd(3, s);
        // random orthogonal from the eigenvectors of a random symmetric matrix
        Mat q = sym_eigen(random_sym(3, s)).vectors;
        auto conj = [&](const SpdPoint& p) {
            return SpdPoint::from_matrix(matmul(matmul(q, p.matrix()), transpose(q)));
        };
        REQUIRE(spd_distance(conj(a), conj(b)) ==
                Catch::Approx(spd_distance(a, b)).margin(1e-9));
    }
}
