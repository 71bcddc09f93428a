#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "hadamard/matrix.hpp"
#include "hadamard/tolerance.hpp"

namespace hadamard {

struct EigenSys {
    std::vector<double> values;  // descending
    Mat vectors;                 // columns match values
};

namespace detail {

// Cyclic Jacobi on raw row-major buffers. A is destroyed; V receives the
// accumulated rotations (columns are eigenvectors of the input).
inline void jacobi_sweep_inplace(double* A, double* V, int n) {
    auto at = [&](double* M, int i, int j) -> double& { return M[i * n + j]; };
    for (int i = 0; i < n * n; ++i) V[i] = 0.0;
    for (int i = 0; i < n; ++i) at(V, i, i) = 1.0;

    double norm = 0.0;
    for (int i = 0; i < n * n; ++i) norm += A[i] * A[i];
    norm = std::sqrt(norm);
    if (norm == 0.0) return;
    const double stop = 1e-15 * norm;

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += at(A, p, q) * at(A, p, q);
        if (std::sqrt(2.0 * off) <= stop) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(A, p, q);
                if (std::abs(apq) <= 1e-300) continue;
                double theta = 0.5 * (at(A, q, q) - at(A, p, p)) / apq;
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);
                double app = at(A, p, p), aqq = at(A, q, q);
                at(A, p, p) = app - t * apq;
                at(A, q, q) = aqq + t * apq;
                at(A, p, q) = 0.0;
                at(A, q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i != p && i != q) {
                        double aip = at(A, i, p), aiq = at(A, i, q);
                        at(A, i, p) = aip - s * (aiq + tau * aip);
                        at(A, i, q) = aiq + s * (aip - tau * aiq);
                        at(A, p, i) = at(A, i, p);
                        at(A, q, i) = at(A, i, q);
                    }
                    double vip = at(V, i, p), viq = at(V, i, q);
                    at(V, i, p) = vip - s * (viq + tau * vip);
                    at(V, i, q) = viq + s * (vip - tau * viq);
                }
            }
        }
    }
}

}  // namespace detail

// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
// Input asymmetry below 1e-10 is symmetrized away; larger asymmetry is an error.
inline EigenSys sym_eigen(const Mat& m) {
    require(m.n > 0, "empty matrix");
    double scale = 1.0 + m.frobenius();
    require(m.max_asymmetry() <= 1e-10 * scale, "matrix is not symmetric");
    Mat A = m;
    A.symmetrize();
    EigenSys es;
    es.vectors = Mat(m.n);
    std::vector<double> work(A.a);
    detail::jacobi_sweep_inplace(work.data(), es.vectors.a.data(), m.n);

    std::vector<int> order(m.n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(m.n);
    for (int i = 0; i < m.n; ++i) diag[i] = work[static_cast<std::size_t>(i) * m.n + i];
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return diag[i] > diag[j]; });

    es.values.resize(m.n);
    Mat sorted(m.n);
    for (int c = 0; c < m.n; ++c) {
        es.values[c] = diag[order[c]];
        for (int r = 0; r < m.n; ++r) sorted(r, c) = es.vectors(r, order[c]);
    }
    es.vectors = std::move(sorted);
    return es;
}

// U f(Lambda) U^T for a spectral function f
template <class F>
Mat spectral_map(const EigenSys& es, F&& f) {
    int n = es.vectors.n;
    Mat out(n);
    for (int c = 0; c < n; ++c) {
        double fv = f(es.values[c]);
        if (fv == 0.0) continue;
        for (int i = 0; i < n; ++i) {
            double vic = es.vectors(i, c) * fv;
            for (int j = 0; j <= i; ++j) out(i, j) += vic * es.vectors(j, c);
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) out(j, i) = out(i, j);
    return out;
}

}  // namespace hadamard
