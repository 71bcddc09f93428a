#pragma once

#include <cmath>
#include <vector>

#include "hadamard/tolerance.hpp"

namespace hadamard {

using EuclideanPoint = std::vector<double>;

// R^dim with the Euclidean metric; the flat Hadamard baseline.
class EuclideanSpace {
  public:
    using point_type = EuclideanPoint;
    static constexpr bool is_hadamard = true;

    explicit EuclideanSpace(std::size_t dim) : dim_(dim) {
        require(dim_ >= 1, "dimension must be >= 1");
    }

    std::size_t dim() const { return dim_; }
    bool operator==(const EuclideanSpace& o) const { return dim_ == o.dim_; }

    double distance(const point_type& a, const point_type& b) const {
        check(a);
        check(b);
        double s = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) {
            double d = a[i] - b[i];
            s += d * d;
        }
        return std::sqrt(s);
    }

    point_type interpolate(const point_type& a, const point_type& b, double t) const {
        require(t >= 0.0 && t <= 1.0, "t outside [0,1]");
        check(a);
        check(b);
        point_type out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) out[i] = (1.0 - t) * a[i] + t * b[i];
        return out;
    }

    bool points_equal(const point_type& a, const point_type& b, double tol) const {
        return distance(a, b) <= tol;
    }

    point_type frechet_mean(const std::vector<point_type>& pts,
                            const std::vector<double>& weights) const {
        require(!pts.empty() && pts.size() == weights.size(), "bad mean input");
        point_type out(dim_, 0.0);
        double wsum = 0.0;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            check(pts[j]);
            for (std::size_t i = 0; i < dim_; ++i) out[i] += weights[j] * pts[j][i];
            wsum += weights[j];
        }
        require(wsum > 0.0, "zero total weight");
        for (double& v : out) v /= wsum;
        return out;
    }

  private:
    void check(const point_type& p) const {
        require(p.size() == dim_, "point has wrong dimension");
        for (double v : p) require(std::isfinite(v), "non-finite coordinate");
    }

    std::size_t dim_;
};

struct ClassicalJsResult {
    EuclideanPoint estimate;
    double shrink_factor = 0.0;  // s in psi*s + (1-s)*X
    bool degenerate = false;     // X == psi
};

// The classical estimator: psi*s + (1-s)*X with s = sigma2 (n-2) / ||X-psi||^2,
// no positive-part clamp. Requires n >= 3. At X == psi the formula is
// undefined; returns psi flagged degenerate.
inline ClassicalJsResult classical_js(const EuclideanPoint& X, const EuclideanPoint& psi,
                                      double sigma2) {
    std::size_t n = X.size();
    require(n >= 3, "classical James-Stein needs dimension >= 3");
    require(psi.size() == n, "dimension mismatch");
    require(sigma2 > 0.0, "sigma2 must be positive");
    double d2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double d = X[i] - psi[i];
        d2 += d * d;
    }
    if (d2 == 0.0) return {psi, 1.0, true};
    double s = sigma2 * static_cast<double>(n - 2) / d2;
    EuclideanPoint out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = psi[i] * s + (1.0 - s) * X[i];
    return {out, s, false};
}

// Positive-part variant: the same shrink factor clamped to [0,1], i.e. the
// geodesic point [X,psi]_{1 ^ s}.
inline ClassicalJsResult positive_part_js(const EuclideanPoint& X,
                                          const EuclideanPoint& psi, double sigma2) {
    std::size_t n = X.size();
    require(n >= 3, "positive-part James-Stein needs dimension >= 3");
    require(psi.size() == n, "dimension mismatch");
    require(sigma2 > 0.0, "sigma2 must be positive");
    double d2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double d = X[i] - psi[i];
        d2 += d * d;
    }
    if (d2 == 0.0) return {psi, 1.0, true};
    double s = std::min(1.0, sigma2 * static_cast<double>(n - 2) / d2);
    EuclideanPoint out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = psi[i] * s + (1.0 - s) * X[i];
    return {out, s, false};
}

}  // namespace hadamard
