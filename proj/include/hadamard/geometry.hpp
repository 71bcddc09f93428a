#pragma once

#include <concepts>
#include <cstddef>
#include <utility>
#include <vector>

#include "hadamard/tolerance.hpp"

namespace hadamard {

// The contract every space implements: a metric, constant-speed geodesic
// interpolation, and tolerance-aware point equality.
template <class S>
concept GeodesicSpace = requires(const S s, const typename S::point_type& p,
                                 double t) {
    { s.distance(p, p) } -> std::convertible_to<double>;
    { s.interpolate(p, p, t) } -> std::convertible_to<typename S::point_type>;
    { s.points_equal(p, p, t) } -> std::convertible_to<bool>;
};

// Weighted point cloud; weights default to 1.
template <class P>
struct WeightedDataset {
    std::vector<P> points;
    std::vector<double> weights;

    WeightedDataset() = default;
    WeightedDataset(std::initializer_list<P> pts)
        : points(pts), weights(points.size(), 1.0) {}
    explicit WeightedDataset(std::vector<P> pts)
        : points(std::move(pts)), weights(points.size(), 1.0) {}
    WeightedDataset(std::vector<P> pts, std::vector<double> w)
        : points(std::move(pts)), weights(std::move(w)) {}

    void validate() const {
        require(!points.empty(), "dataset is empty");
        require(points.size() == weights.size(),
                "dataset points/weights length mismatch");
        bool any_pos = false;
        for (double w : weights) {
            require(w >= 0.0, "negative dataset weight");
            if (w > 0.0) any_pos = true;
        }
        require(any_pos, "dataset needs at least one positive weight");
    }
};

// Weighted sum of squared distances to z.
template <GeodesicSpace S>
double frechet_functional(const S& space, const WeightedDataset<typename S::point_type>& data,
                          const typename S::point_type& z) {
    data.validate();
    double f = 0.0;
    for (std::size_t i = 0; i < data.points.size(); ++i) {
        double d = space.distance(data.points[i], z);
        f += data.weights[i] * d * d;
    }
    return f;
}

// Exhaustive minimization over a candidate set; the test oracle.
// Ties break to the first candidate in order.
template <GeodesicSpace S>
std::pair<typename S::point_type, double> brute_force_frechet_mean(
    const S& space, const WeightedDataset<typename S::point_type>& data,
    const std::vector<typename S::point_type>& candidates) {
    require(!candidates.empty(), "empty candidate set");
    data.validate();
    std::size_t best = 0;
    double best_val = frechet_functional(space, data, candidates[0]);
    for (std::size_t c = 1; c < candidates.size(); ++c) {
        double v = frechet_functional(space, data, candidates[c]);
        if (v < best_val) {
            best_val = v;
            best = c;
        }
    }
    return {candidates[best], best_val};
}

// Frechet mean of a finite discrete law, minimized over a candidate set.
template <GeodesicSpace S>
typename S::point_type conditional_frechet_mean_discrete(
    const S& space, const std::vector<typename S::point_type>& support,
    const std::vector<double>& probs,
    const std::vector<typename S::point_type>& candidates) {
    require(support.size() == probs.size(), "support/probs length mismatch");
    double total = 0.0;
    for (double p : probs) {
        require(p >= 0.0, "negative probability");
        total += p;
    }
    require(std::abs(total - 1.0) <= 1e-9, "probabilities do not sum to 1");
    WeightedDataset<typename S::point_type> law(support, probs);
    return brute_force_frechet_mean(space, law, candidates).first;
}

// RHS minus LHS of the CAT(0) comparison inequality
//   d([x,y]_t, z)^2 <= (1-t) d(x,z)^2 + t d(y,z)^2 - t(1-t) d(x,y)^2.
// Nonnegative (within tolerance) in a Hadamard space; zero in a flat one.
template <GeodesicSpace S>
double cat0_slack(const S& space, const typename S::point_type& x,
                  const typename S::point_type& y, const typename S::point_type& z,
                  double t) {
    require(t >= 0.0 && t <= 1.0, "t outside [0,1]");
    double dxz = space.distance(x, z);
    double dyz = space.distance(y, z);
    double dxy = space.distance(x, y);
    double dgz = space.distance(space.interpolate(x, y, t), z);
    return (1.0 - t) * dxz * dxz + t * dyz * dyz - t * (1.0 - t) * dxy * dxy -
           dgz * dgz;
}

// Convexity of the distance between two geodesics run at a common parameter:
//   d([x,y]_t, [w,z]_t) <= (1-t) d(x,w) + t d(y,z).
// Returns RHS minus LHS.
template <GeodesicSpace S>
double pair_convexity_slack(const S& space, const typename S::point_type& x,
                            const typename S::point_type& y,
                            const typename S::point_type& w,
                            const typename S::point_type& z, double t) {
    require(t >= 0.0 && t <= 1.0, "t outside [0,1]");
    double lhs = space.distance(space.interpolate(x, y, t), space.interpolate(w, z, t));
    return (1.0 - t) * space.distance(x, w) + t * space.distance(y, z) - lhs;
}

}  // namespace hadamard
