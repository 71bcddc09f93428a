#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "hadamard/geometry.hpp"
#include "hadamard/product.hpp"
#include "hadamard/tolerance.hpp"

namespace hadamard {

template <class S>
concept FrechetMeanSpace =
    GeodesicSpace<S> &&
    requires(const S s, const std::vector<typename S::point_type>& pts,
             const std::vector<double>& w) {
        { s.frechet_mean(pts, w) } -> std::convertible_to<typename S::point_type>;
    };

// w(X) = 1 ^ (sigma2 / dist2); dist2 = 0 shrinks fully.
inline double js_weight(double sigma2, double dist2) {
    require(sigma2 >= 0.0 && dist2 >= 0.0, "negative inputs");
    if (dist2 == 0.0) return 1.0;
    return std::min(1.0, sigma2 / dist2);
}

// w~ = 1 ^ (alpha0 / dist2) for a known lower bound alpha0 <= sigma2.
inline double alpha_scaled_weight(double alpha0, double dist2) {
    require(alpha0 > 0.0, "alpha0 must be positive");
    require(dist2 >= 0.0, "negative distance");
    if (dist2 == 0.0) return 1.0;
    return std::min(1.0, alpha0 / dist2);
}

struct OracleWeight {
    double value = 0.0;
    bool degenerate = false;  // rho(X,psi)^2 = 0
};

// t~ = (sigma2 + rho(X,psi)^2 - rho(theta,psi)^2) / (2 rho(X,psi)^2), clamped
// to [0,1]. Second moments are caller-supplied: rho(theta,psi)^2 may be the
// fixed-theta value d(theta,psi)^2 or the prior expectation E d(theta,psi)^2;
// both readings use the same formula.
inline OracleWeight oracle_weight(double sigma2, double rho_x_psi2,
                                  double rho_theta_psi2) {
    require(sigma2 >= 0.0 && rho_x_psi2 >= 0.0 && rho_theta_psi2 >= 0.0,
            "negative inputs");
    if (rho_x_psi2 == 0.0) return {1.0, true};
    double t = (sigma2 + rho_x_psi2 - rho_theta_psi2) / (2.0 * rho_x_psi2);
    return {std::clamp(t, 0.0, 1.0), false};
}

template <class P>
struct ShrinkageSpec {
    enum class PointMode { Fixed, AdaptiveSampleMean, OracleMu };
    enum class WeightMode { JamesStein, AlphaScaled, FixedWeight };

    PointMode point_mode = PointMode::Fixed;
    WeightMode weight_mode = WeightMode::JamesStein;
    std::vector<double> sigma2_per_group;  // JamesStein numerator, one per group
    double alpha0 = 0.0;   // AlphaScaled: lower bound on the product variance
    double fixed_t = 0.0;  // FixedWeight
    std::vector<P> psi;    // Fixed: per group (or one entry, replicated)
    std::optional<P> mu;   // OracleMu

    static ShrinkageSpec fixed(std::vector<P> shrink_points,
                               std::vector<double> sigma2) {
        ShrinkageSpec s;
        s.point_mode = PointMode::Fixed;
        s.psi = std::move(shrink_points);
        s.sigma2_per_group = std::move(sigma2);
        return s;
    }
    static ShrinkageSpec adaptive(std::vector<double> sigma2) {
        ShrinkageSpec s;
        s.point_mode = PointMode::AdaptiveSampleMean;
        s.sigma2_per_group = std::move(sigma2);
        return s;
    }
    static ShrinkageSpec oracle_mu(P mu_point, double fixed_weight) {
        ShrinkageSpec s;
        s.point_mode = PointMode::OracleMu;
        s.weight_mode = WeightMode::FixedWeight;
        s.mu = std::move(mu_point);
        s.fixed_t = fixed_weight;
        return s;
    }
};

template <class P>
struct ShrinkageEstimate {
    std::vector<P> points;
    std::vector<P> resolved_psi;
    double weight_applied = 0.0;
    double dist2 = 0.0;   // d(X,psi)^2 in the 1/n product metric
    double sigma2 = 0.0;  // product Frechet variance used by the weight
    bool degenerate = false;
};

// Sample Frechet mean of the components, for the adaptive shrinkage point.
// Requires every component to live in the same space instance.
template <FrechetMeanSpace S>
typename S::point_type adaptive_shrink_point(
    const ProductSpace<S>& spaces, const typename ProductSpace<S>::point_type& X) {
    spaces.check_point(X);
    for (std::size_t i = 1; i < spaces.size(); ++i)
        require(spaces.component(i) == spaces.component(0),
                "adaptive shrinkage point needs identical component spaces");
    return spaces.component(0).frechet_mean(X, std::vector<double>(X.size(), 1.0));
}

// Geodesic James-Stein family: componentwise [X_j, psi_j]_w with one common
// weight. JamesStein weight uses the unnormalized sums of Eq-form
// sum_i sigma_i^2 / sum_i d_i(X_i, psi_i)^2.
template <GeodesicSpace S>
ShrinkageEstimate<typename S::point_type> geodesic_js(
    const ProductSpace<S>& spaces, const typename ProductSpace<S>::point_type& X,
    const ShrinkageSpec<typename S::point_type>& spec) {
    using P = typename S::point_type;
    using Spec = ShrinkageSpec<P>;
    spaces.check_point(X);
    const std::size_t n = spaces.size();

    std::vector<P> psi;
    switch (spec.point_mode) {
        case Spec::PointMode::Fixed:
            require(spec.psi.size() == n || spec.psi.size() == 1,
                    "psi must have one entry or one per group");
            if (spec.psi.size() == n)
                psi = spec.psi;
            else
                psi.assign(n, spec.psi[0]);
            break;
        case Spec::PointMode::AdaptiveSampleMean:
            if constexpr (FrechetMeanSpace<S>) {
                psi.assign(n, adaptive_shrink_point(spaces, X));
            } else {
                require(false, "component space has no sample Frechet mean routine");
            }
            break;
        case Spec::PointMode::OracleMu:
            require(spec.mu.has_value(), "OracleMu mode needs mu");
            psi.assign(n, *spec.mu);
            break;
    }

    double dist2_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double d = spaces.component(i).distance(X[i], psi[i]);
        dist2_sum += d * d;
    }
    const double dist2 = dist2_sum / static_cast<double>(n);

    double w = 0.0;
    double sigma2 = 0.0;
    bool degenerate = false;
    switch (spec.weight_mode) {
        case Spec::WeightMode::JamesStein: {
            require(spec.sigma2_per_group.size() == n, "need sigma_i^2 per group");
            double sigma2_sum = 0.0;
            for (double s : spec.sigma2_per_group) {
                require(s > 0.0, "sigma_i^2 must be positive");
                sigma2_sum += s;
            }
            sigma2 = sigma2_sum / static_cast<double>(n);
            degenerate = dist2_sum == 0.0;
            w = js_weight(sigma2_sum, dist2_sum);
            break;
        }
        case Spec::WeightMode::AlphaScaled:
            degenerate = dist2 == 0.0;
            w = alpha_scaled_weight(spec.alpha0, dist2);
            sigma2 = spec.alpha0;
            break;
        case Spec::WeightMode::FixedWeight:
            require(spec.fixed_t >= 0.0 && spec.fixed_t <= 1.0, "t outside [0,1]");
            w = spec.fixed_t;
            break;
    }

    ShrinkageEstimate<P> out;
    out.points.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.points.push_back(spaces.component(i).interpolate(X[i], psi[i], w));
    out.resolved_psi = std::move(psi);
    out.weight_applied = w;
    out.dist2 = dist2;
    out.sigma2 = sigma2;
    out.degenerate = degenerate;
    return out;
}

// Pointwise CAT(0) bound on the loss of [X,psi]_w, any w in [0,1]:
//   (1-w) d(X,theta)^2 + w d(theta,psi)^2 - w(1-w) d(X,psi)^2.
inline double cat0_loss_bound(double w, double d_x_theta2, double d_theta_psi2,
                              double d_x_psi2) {
    return (1.0 - w) * d_x_theta2 + w * d_theta_psi2 - w * (1.0 - w) * d_x_psi2;
}

// The (a)+(b)+(c) loss decomposition for the plain James-Stein weight.
// Valid only when w = 1 ^ sigma2/d(X,psi)^2 (the substitution
// w d(X,psi)^2 = sigma2 on {w < 1} is what makes it an upper bound).
inline double js_loss_certificate(double w, double d_x_theta2, double sigma2,
                                  double d_theta_psi2) {
    if (w >= 1.0) return d_theta_psi2;  // (c)
    return (1.0 - w) * (d_x_theta2 - sigma2) + w * d_theta_psi2;  // (a) + (b)
}

}  // namespace hadamard
