#pragma once

#include <cmath>
#include <initializer_list>
#include <vector>

#include "hadamard/tolerance.hpp"

namespace hadamard {

// Dense square matrix, row-major. Sized for the small k (<= 10) used here.
struct Mat {
    int n = 0;
    std::vector<double> a;

    Mat() = default;
    explicit Mat(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0.0) {}
    Mat(int size, std::initializer_list<double> vals) : n(size), a(vals) {
        require(static_cast<int>(a.size()) == n * n, "matrix literal size mismatch");
    }

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double operator()(int i, int j) const {
        return a[static_cast<std::size_t>(i) * n + j];
    }

    static Mat identity(int size) {
        Mat m(size);
        for (int i = 0; i < size; ++i) m(i, i) = 1.0;
        return m;
    }
    static Mat diag(const std::vector<double>& d) {
        Mat m(static_cast<int>(d.size()));
        for (int i = 0; i < m.n; ++i) m(i, i) = d[i];
        return m;
    }

    Mat& operator+=(const Mat& o) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] -= o.a[i];
        return *this;
    }
    Mat& operator*=(double s) {
        for (double& v : a) v *= s;
        return *this;
    }
    friend Mat operator+(Mat x, const Mat& y) { return x += y; }
    friend Mat operator-(Mat x, const Mat& y) { return x -= y; }
    friend Mat operator*(Mat x, double s) { return x *= s; }
    friend Mat operator*(double s, Mat x) { return x *= s; }

    double frobenius() const {
        double s = 0.0;
        for (double v : a) s += v * v;
        return std::sqrt(s);
    }

    double max_asymmetry() const {
        double m = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
        return m;
    }

    void symmetrize() {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                double v = 0.5 * ((*this)(i, j) + (*this)(j, i));
                (*this)(i, j) = v;
                (*this)(j, i) = v;
            }
    }
};

inline Mat matmul(const Mat& x, const Mat& y) {
    require(x.n == y.n, "matmul size mismatch");
    Mat out(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            double v = x(i, k);
            if (v == 0.0) continue;
            for (int j = 0; j < x.n; ++j) out(i, j) += v * y(k, j);
        }
    return out;
}

inline Mat transpose(const Mat& x) {
    Mat out(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) out(j, i) = x(i, j);
    return out;
}

// Frobenius inner distance ||x - y||_F without a temporary
inline double frobenius_distance(const Mat& x, const Mat& y) {
    require(x.n == y.n, "size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i) {
        double d = x.a[i] - y.a[i];
        s += d * d;
    }
    return std::sqrt(s);
}

// Lower Cholesky factor of a positive-definite matrix.
inline Mat cholesky_lower(const Mat& m) {
    Mat L(m.n);
    for (int i = 0; i < m.n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = m(i, j);
            for (int k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
            if (i == j) {
                require(s > 0.0, "matrix not positive definite in Cholesky");
                L(i, i) = std::sqrt(s);
            } else {
                L(i, j) = s / L(j, j);
            }
        }
    }
    return L;
}

}  // namespace hadamard
