#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "hadamard/jacobi.hpp"
#include "hadamard/matrix.hpp"
#include "hadamard/tolerance.hpp"

namespace hadamard {

// Symmetric k x k matrix, the log-image space. Construction symmetrizes
// asymmetry below 1e-10 and rejects anything larger.
struct SymMatrix {
    Mat m;

    static SymMatrix from_matrix(Mat in) {
        double scale = 1.0 + in.frobenius();
        require(in.max_asymmetry() <= 1e-10 * scale, "matrix is not symmetric");
        in.symmetrize();
        return SymMatrix{std::move(in)};
    }
};

// SPD point under the log-Euclidean metric. Stores the matrix and its log
// (one eigendecomposition at construction, reused by every metric op).
class SpdPoint {
  public:
    static constexpr double near_singular_eps = 1e-13;

    static SpdPoint from_matrix(const Mat& in) {
        SymMatrix sym = SymMatrix::from_matrix(in);
        EigenSys es = sym_eigen(sym.m);
        for (double ev : es.values)
            require(ev > near_singular_eps, "matrix is singular or not positive definite");
        Mat lg = spectral_map(es, [](double v) { return std::log(v); });
        return SpdPoint(std::move(sym.m), std::move(lg));
    }

    // exp of a symmetric matrix; always SPD
    static SpdPoint exp_of(const SymMatrix& s) {
        EigenSys es = sym_eigen(s.m);
        Mat m = spectral_map(es, [](double v) { return std::exp(v); });
        Mat lg = s.m;
        return SpdPoint(std::move(m), std::move(lg));
    }

    static SpdPoint identity(int k) {
        return SpdPoint(Mat::identity(k), Mat(k));
    }
    static SpdPoint scaled_identity(int k, double c) {
        require(c > 0.0, "scale must be positive");
        Mat m = Mat::identity(k);
        m *= c;
        Mat lg = Mat::identity(k);
        lg *= std::log(c);
        return SpdPoint(std::move(m), std::move(lg));
    }

    const Mat& matrix() const { return mat_; }
    const Mat& log() const { return log_; }
    int k() const { return mat_.n; }

  private:
    SpdPoint(Mat m, Mat lg) : mat_(std::move(m)), log_(std::move(lg)) {}
    Mat mat_;
    Mat log_;
};

inline SymMatrix spd_log(const SpdPoint& a) { return SymMatrix{a.log()}; }
inline SpdPoint spd_exp(const SymMatrix& s) { return SpdPoint::exp_of(s); }

inline double spd_distance(const SpdPoint& a, const SpdPoint& b) {
    require(a.k() == b.k(), "SPD size mismatch");
    return frobenius_distance(a.log(), b.log());
}

// exp((1-t) log A + t log B)
inline SpdPoint spd_interpolate(const SpdPoint& a, const SpdPoint& b, double t) {
    require(t >= 0.0 && t <= 1.0, "t outside [0,1]");
    require(a.k() == b.k(), "SPD size mismatch");
    Mat s = a.log();
    s *= (1.0 - t);
    Mat sb = b.log();
    sb *= t;
    s += sb;
    return SpdPoint::exp_of(SymMatrix{std::move(s)});
}

// Closed-form weighted Frechet mean: exp( sum w_i log X_i / sum w_i )
inline SpdPoint spd_frechet_mean(const std::vector<SpdPoint>& data,
                                 const std::vector<double>& weights) {
    require(!data.empty() && data.size() == weights.size(), "bad mean input");
    Mat acc(data[0].k());
    double wsum = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        require(data[i].k() == acc.n, "SPD size mismatch");
        require(weights[i] >= 0.0, "negative weight");
        Mat term = data[i].log();
        term *= weights[i];
        acc += term;
        wsum += weights[i];
    }
    require(wsum > 0.0, "zero total weight");
    acc *= 1.0 / wsum;
    return SpdPoint::exp_of(SymMatrix{std::move(acc)});
}

inline SpdPoint spd_frechet_mean(const std::vector<SpdPoint>& data) {
    return spd_frechet_mean(data, std::vector<double>(data.size(), 1.0));
}

// SPD(k) as a geodesic space (flat Hadamard, isometric to Sym(k)).
class SpdSpace {
  public:
    using point_type = SpdPoint;
    static constexpr bool is_hadamard = true;

    explicit SpdSpace(int k) : k_(k) { require(k >= 1, "k must be >= 1"); }

    int k() const { return k_; }
    bool operator==(const SpdSpace& o) const { return k_ == o.k_; }

    double distance(const SpdPoint& a, const SpdPoint& b) const {
        check(a);
        check(b);
        return spd_distance(a, b);
    }
    SpdPoint interpolate(const SpdPoint& a, const SpdPoint& b, double t) const {
        check(a);
        check(b);
        return spd_interpolate(a, b, t);
    }
    bool points_equal(const SpdPoint& a, const SpdPoint& b, double tol) const {
        return distance(a, b) <= tol;
    }
    SpdPoint frechet_mean(const std::vector<SpdPoint>& pts,
                          const std::vector<double>& weights) const {
        return spd_frechet_mean(pts, weights);
    }

  private:
    void check(const SpdPoint& p) const {
        require(p.k() == k_, "SPD point has wrong size for this space");
    }
    int k_;
};

}  // namespace hadamard
