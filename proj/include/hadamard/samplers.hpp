#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "hadamard/matrix.hpp"
#include "hadamard/rng.hpp"
#include "hadamard/spd.hpp"
#include "hadamard/tolerance.hpp"
#include "hadamard/tree_word.hpp"

namespace hadamard {

inline std::vector<double> sample_gaussian(std::size_t dim, double mean, double sd,
                                           RngStream& stream) {
    require(sd >= 0.0, "sd must be nonnegative");
    std::vector<double> out(dim, mean);
    if (sd == 0.0) return out;
    double g0, g1;
    std::size_t i = 0;
    for (; i + 1 < dim; i += 2) {
        stream.next_gaussian_pair(g0, g1);
        out[i] += sd * g0;
        out[i + 1] += sd * g1;
    }
    if (i < dim) out[i] += sd * stream.next_gaussian();
    return out;
}

// Bartlett decomposition: W = (L A)(L A)^T with Psi = L L^T, A lower
// triangular, A_ii^2 ~ chi^2(df-i+1), subdiagonals standard normal.
// E[W] = df * Psi. Requires df >= k.
inline Mat sample_wishart_matrix(const Mat& psi_chol_lower, int df, RngStream& stream) {
    int k = psi_chol_lower.n;
    require(df >= k, "Wishart df must be >= dimension");
    Mat A(k);
    for (int i = 0; i < k; ++i) {
        A(i, i) = std::sqrt(stream.next_chi2(df - i));
        for (int j = 0; j < i; ++j) A(i, j) = stream.next_gaussian();
    }
    Mat LA = matmul(psi_chol_lower, A);
    Mat W(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= i; ++j) {
            double s = 0.0;
            for (int c = 0; c <= std::min(i, j); ++c) s += LA(i, c) * LA(j, c);
            W(i, j) = s;
            W(j, i) = s;
        }
    return W;
}

inline SpdPoint sample_wishart(const SpdPoint& scale, int df, RngStream& stream) {
    Mat L = cholesky_lower(scale.matrix());
    return SpdPoint::from_matrix(sample_wishart_matrix(L, df, stream));
}

enum class WalkLaw {
    Lazy,        // 1/4 to each of the 3 neighbors, 1/4 hold
    UniformMove  // 1/3 to each neighbor, never holds
};

// One trajectory of the vertex walk on the infinite 3-regular tree.
inline TreeWord tree_walk_3regular(TreeWord start, int steps, WalkLaw law,
                                   RngStream& stream) {
    require(steps >= 0, "steps must be nonnegative");
    for (int s = 0; s < steps; ++s) {
        std::uint32_t move;
        if (law == WalkLaw::Lazy) {
            std::uint32_t r = stream.next_below(4);
            if (r == 0) continue;
            move = r - 1;  // 0,1,2
        } else {
            move = stream.next_below(3);
        }
        if (start.is_origin()) {
            start.letters.push_back(static_cast<std::uint8_t>(move));
        } else if (move == 0) {
            start.letters.pop_back();
        } else {
            start.letters.push_back(static_cast<std::uint8_t>(move - 1));
        }
    }
    return start;
}

inline TreeWord lazy_walk_3regular(const TreeWord& start, int steps, RngStream& stream) {
    return tree_walk_3regular(start, steps, WalkLaw::Lazy, stream);
}

// Law of the distance from the walk's starting vertex.
struct DistanceDistribution {
    std::vector<double> probs;  // index = distance
    int steps = 0;

    double second_moment() const {
        double m2 = 0.0;
        for (std::size_t d = 0; d < probs.size(); ++d)
            m2 += probs[d] * static_cast<double>(d) * static_cast<double>(d);
        return m2;
    }
    double total() const {
        double s = 0.0;
        for (double p : probs) s += p;
        return s;
    }
};

// Exact 1-D dynamic program on distance-from-start.
// Lazy law: from 0 -> {hold 1/4, +1 3/4}; from d>=1 -> {-1 1/4, hold 1/4, +1 1/2}.
// UniformMove law: from 0 -> {+1 1}; from d>=1 -> {-1 1/3, +1 2/3}.
inline DistanceDistribution walk_distance_distribution(int steps,
                                                       WalkLaw law = WalkLaw::Lazy) {
    require(steps >= 0, "steps must be nonnegative");
    double hold0, out0, back, hold, fwd;
    if (law == WalkLaw::Lazy) {
        hold0 = 0.25; out0 = 0.75; back = 0.25; hold = 0.25; fwd = 0.5;
    } else {
        hold0 = 0.0; out0 = 1.0; back = 1.0 / 3.0; hold = 0.0; fwd = 2.0 / 3.0;
    }
    std::vector<double> p(static_cast<std::size_t>(steps) + 1, 0.0);
    p[0] = 1.0;
    std::vector<double> q(p.size());
    for (int s = 0; s < steps; ++s) {
        std::fill(q.begin(), q.end(), 0.0);
        q[0] = p[0] * hold0 + (p.size() > 1 ? p[1] * back : 0.0);
        for (std::size_t d = 1; d < p.size(); ++d) {
            q[d] = p[d] * hold + p[d - 1] * (d == 1 ? out0 : fwd);
            if (d + 1 < p.size()) q[d] += p[d + 1] * back;
        }
        std::swap(p, q);
    }
    return DistanceDistribution{std::move(p), steps};
}

// Conditional Frechet moments of X = W/df, W ~ Wishart(Psi, df), df = k+alpha,
// under the log-Euclidean metric, by plain Monte Carlo:
//   theta = exp(E log X),  sigma2 = E || log X - log theta ||_F^2.
struct SpdConditionalMoments {
    Mat log_theta;
    double sigma2 = 0.0;
    double sigma2_std_error = 0.0;
    int n_oracle = 0;

    SpdPoint theta() const { return SpdPoint::exp_of(SymMatrix{log_theta}); }
};

inline SpdConditionalMoments spd_conditional_moments(const SpdPoint& psi, int alpha,
                                                     int n_oracle, RngStream& stream) {
    require(alpha >= 0, "alpha must be nonnegative");
    require(n_oracle >= 2, "need at least two oracle draws");
    const int k = psi.k();
    const int df = k + alpha;
    Mat L = cholesky_lower(psi.matrix());
    Mat acc(k);
    double acc_sq = 0.0, acc_sq2 = 0.0;
    const double inv_df = 1.0 / static_cast<double>(df);
    for (int i = 0; i < n_oracle; ++i) {
        Mat W = sample_wishart_matrix(L, df, stream);
        W *= inv_df;
        Mat lx = SpdPoint::from_matrix(W).log();
        acc += lx;
        double sq = 0.0;
        for (double v : lx.a) sq += v * v;
        acc_sq += sq;
        acc_sq2 += sq * sq;
    }
    SpdConditionalMoments out;
    out.n_oracle = n_oracle;
    acc *= 1.0 / static_cast<double>(n_oracle);
    out.log_theta = acc;
    double mean_sq = acc_sq / n_oracle;
    double norm_mean = 0.0;
    for (double v : acc.a) norm_mean += v * v;
    double nn = static_cast<double>(n_oracle);
    out.sigma2 = (mean_sq - norm_mean) * nn / (nn - 1.0);
    double var_sq = std::max(0.0, acc_sq2 / nn - mean_sq * mean_sq);
    out.sigma2_std_error = std::sqrt(var_sq / nn);
    return out;
}

}  // namespace hadamard
