#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hadamard/euclidean.hpp"
#include "hadamard/monte_carlo.hpp"
#include "hadamard/samplers.hpp"
#include "hadamard/shrinkage.hpp"

using namespace hadamard;

namespace {

using EuclidProduct = ProductSpace<EuclideanSpace>;
using Pt = EuclidProduct::point_type;

Pt gaussian_conditional(const Pt& theta, double sd, RngStream& s) {
    Pt x = theta;
    for (auto& comp : x) comp[0] += sd * s.next_gaussian();
    return x;
}

}  // namespace

TEST_CASE("risk of the identity estimator is sigma2") {
    EuclideanSpace e1(1);
    EuclidProduct p10(10, e1);
    Pt theta(10, EuclideanPoint{0.0});
    auto est = mc_frequentist_risk(
        p10, theta,
        [](const Pt& th, RngStream& s) { return gaussian_conditional(th, 1.0, s); },
        [](const Pt& x) { return x; }, 20000, 99, 2, "idrisk");
    REQUIRE(std::abs(est.mean_loss - 1.0) <= 4.0 * est.std_error);
}

TEST_CASE("degenerate sampler gives zero risk exactly") {
    EuclideanSpace e1(1);
    EuclidProduct p4(4, e1);
    Pt theta(4, EuclideanPoint{1.5});
    auto est = mc_frequentist_risk(
        p4, theta, [](const Pt& th, RngStream&) { return th; },
        [](const Pt& x) { return x; }, 500, 1, 1, "zero");
    REQUIRE(est.mean_loss == 0.0);
    REQUIRE_THROWS_AS(mc_frequentist_risk(
                          p4, theta, [](const Pt& th, RngStream&) { return th; },
                          [](const Pt& x) { return x; }, 0, 1, 1, "bad"),
                      domain_error);
}

TEST_CASE("classical james-stein risk at the shrinkage point is 2 sigma2 / n") {
    // n = 10 gaussian groups, theta = psi = 0, sigma2 = 1: normalized risk 0.2
    EuclideanSpace e1(1);
    EuclidProduct p10(10, e1);
    Pt theta(10, EuclideanPoint{0.0});
    auto est = mc_frequentist_risk(
        p10, theta,
        [](const Pt& th, RngStream& s) { return gaussian_conditional(th, 1.0, s); },
        [](const Pt& x) {
            EuclideanPoint flat(10), zero(10, 0.0);
            for (int i = 0; i < 10; ++i) flat[i] = x[i][0];
            auto r = classical_js(flat, zero, 1.0);
            Pt out(10);
            for (int i = 0; i < 10; ++i) out[i] = {r.estimate[i]};
            return out;
        },
        40000, 7, 2, "steinrisk");
    REQUIRE(std::abs(est.mean_loss - 0.2) <= 4.0 * est.std_error);
}

TEST_CASE("bayes risk of the identity and of a constant") {
    EuclideanSpace e1(1);
    EuclidProduct p8(8, e1);
    const double sigma = 0.7, tau = 1.3;
    auto prior = [&](RngStream& s) {
        Pt th(8);
        for (auto& c : th) c = {tau * s.next_gaussian()};
        return th;
    };
    auto cond = [&](const Pt& th, RngStream& s) {
        return gaussian_conditional(th, sigma, s);
    };
    auto id_est = mc_bayes_risk(p8, prior, cond, [](const Pt& x) { return x; },
                                30000, 5, 2, "bayesid");
    REQUIRE(std::abs(id_est.mean_loss - sigma * sigma) <= 4.0 * id_est.std_error);

    Pt mu(8, EuclideanPoint{0.0});
    auto const_est = mc_bayes_risk(p8, prior, cond, [&](const Pt&) { return mu; },
                                   30000, 5, 2, "bayesconst");
    REQUIRE(std::abs(const_est.mean_loss - tau * tau) <= 4.0 * const_est.std_error);
}

TEST_CASE("oracle-weighted shrinkage beats both endpoints in a hierarchical model") {
    EuclideanSpace e1(1);
    EuclidProduct p8(8, e1);
    const double sigma = 1.0, tau = 0.8;
    auto prior = [&](RngStream& s) {
        Pt th(8);
        for (auto& c : th) c = {tau * s.next_gaussian()};
        return th;
    };
    auto cond = [&](const Pt& th, RngStream& s) {
        return gaussian_conditional(th, sigma, s);
    };
    // Hilbert case: rho(X,mu)^2 = sigma2 + tau2, rho(theta,mu)^2 = tau2
    double t = oracle_weight(sigma * sigma, sigma * sigma + tau * tau, tau * tau).value;
    Pt mu(8, EuclideanPoint{0.0});
    auto shrunk = mc_bayes_risk(
        p8, prior, cond,
        [&](const Pt& x) {
            Pt out(8);
            for (int i = 0; i < 8; ++i) out[i] = {(1.0 - t) * x[i][0]};
            return out;
        },
        30000, 5, 2, "bayesshrunk");
    // the optimal linear weight gives risk sigma2 tau2 / (sigma2 + tau2)
    double expect = sigma * sigma * tau * tau / (sigma * sigma + tau * tau);
    REQUIRE(std::abs(shrunk.mean_loss - expect) <= 4.0 * shrunk.std_error);
    REQUIRE(shrunk.mean_loss < sigma * sigma);
    REQUIRE(shrunk.mean_loss < tau * tau);
}

TEST_CASE("parallel reduction is bitwise identical across worker counts") {
    auto run = [&](int workers) {
        return parallel_mc(10000, 2, workers, [](std::uint64_t i, double* out) {
            RngStream s = make_stream(123, "det", i);
            double a = s.next_gaussian();
            out[0] = a;
            out[1] = std::exp(0.1 * a) + s.next_double();
        });
    };
    auto r1 = run(1), r4 = run(4), r8 = run(8);
    for (int w = 0; w < 2; ++w) {
        REQUIRE(r1[w].mean == r4[w].mean);
        REQUIRE(r4[w].mean == r8[w].mean);
        REQUIRE(r1[w].std_error == r4[w].std_error);
        REQUIRE(r4[w].std_error == r8[w].std_error);
    }
}
