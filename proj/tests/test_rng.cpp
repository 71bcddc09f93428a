#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "hadamard/rng.hpp"

using namespace hadamard;

TEST_CASE("same seed, stream and index give identical output") {
    RngStream a = make_stream(42, "tag", 7, 3);
    RngStream b = make_stream(42, "tag", 7, 3);
    for (int i = 0; i < 100; ++i) REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("different streams decorrelate") {
    RngStream a = make_stream(42, "tag", 0);
    RngStream b = make_stream(42, "tag", 1);
    int equal = 0;
    for (int i = 0; i < 1000; ++i)
        if (a.next_u64() == b.next_u64()) ++equal;
    REQUIRE(equal == 0);
}

TEST_CASE("uniforms cover [0,1)") {
    RngStream s = make_stream(1, "unif");
    double mn = 1.0, mx = 0.0, mean = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        double u = s.next_double();
        mn = std::min(mn, u);
        mx = std::max(mx, u);
        mean += u;
    }
    mean /= n;
    REQUIRE(mn >= 0.0);
    REQUIRE(mx < 1.0);
    REQUIRE(std::abs(mean - 0.5) < 0.005);
}

TEST_CASE("gaussian moments") {
    RngStream s = make_stream(2, "gauss");
    const int n = 200000;
    double m1 = 0.0, m2 = 0.0;
    for (int i = 0; i < n; ++i) {
        double g = s.next_gaussian();
        m1 += g;
        m2 += g * g;
    }
    m1 /= n;
    m2 /= n;
    REQUIRE(std::abs(m1) < 0.01);
    REQUIRE(std::abs(m2 - 1.0) < 0.02);
}

TEST_CASE("chi2 mean is df") {
    RngStream s = make_stream(3, "chi2");
    for (int df : {1, 5, 350}) {
        const int n = 20000;
        double m = 0.0;
        for (int i = 0; i < n; ++i) m += s.next_chi2(df);
        m /= n;
        REQUIRE(std::abs(m - df) < 0.06 * df + 0.05);
    }
}

TEST_CASE("next_below is in range and near-uniform") {
    RngStream s = make_stream(4, "below");
    std::vector<int> counts(4, 0);
    const int n = 100000;
    for (int i = 0; i < n; ++i) ++counts[s.next_below(4)];
    for (int c : counts) REQUIRE(std::abs(c - n / 4) < 1000);
}
