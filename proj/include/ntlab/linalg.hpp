#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace ntlab {

// Row-major dense matrix just big enough for the handful of small solves
// (parameter dimensions here are 1..6).
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0.0) {}
    double& operator()(int i, int j) { return a[std::size_t(i) * cols + j]; }
    double operator()(int i, int j) const { return a[std::size_t(i) * cols + j]; }
};

// Gaussian elimination with partial pivoting; solves in place, A destroyed.
inline std::vector<double> solve_dense(Matrix A, std::vector<double> b) {
    const int n = A.rows;
    if (A.cols != n || int(b.size()) != n) throw std::invalid_argument("solve_dense: shape mismatch");
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::fabs(A(i, k)) > std::fabs(A(piv, k))) piv = i;
        if (std::fabs(A(piv, k)) < 1e-300) throw std::runtime_error("solve_dense: singular matrix");
        if (piv != k) {
            for (int j = k; j < n; ++j) std::swap(A(k, j), A(piv, j));
            std::swap(b[k], b[piv]);
        }
        for (int i = k + 1; i < n; ++i) {
            const double m = A(i, k) / A(k, k);
            if (m == 0.0) continue;
            for (int j = k; j < n; ++j) A(i, j) -= m * A(k, j);
            b[i] -= m * b[k];
        }
    }
    std::vector<double> x(n);
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < n; ++j) s -= A(i, j) * x[j];
        x[i] = s / A(i, i);
    }
    return x;
}

inline Matrix invert(const Matrix& A) {
    const int n = A.rows;
    Matrix inv(n, n);
    for (int j = 0; j < n; ++j) {
        std::vector<double> e(n, 0.0);
        e[j] = 1.0;
        std::vector<double> col = solve_dense(A, e);
        for (int i = 0; i < n; ++i) inv(i, j) = col[i];
    }
    return inv;
}

inline std::vector<double> matvec(const Matrix& A, const std::vector<double>& x) {
    std::vector<double> y(A.rows, 0.0);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) y[i] += A(i, j) * x[j];
    return y;
}

} // namespace ntlab
