#pragma once

// Test-only dense fallback: O(n^3) Gaussian elimination with partial
// pivoting, used as an oracle for the Thomas solver and the per-step
// linear systems.

#include "radheat/tridiag.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace radheat::testing {

inline std::vector<std::vector<double>> to_dense(const TriDiag& A) {
    const std::size_t n = A.dim();
    std::vector<std::vector<double>> D(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        D[i][i] = A.diag(i);
        if (i > 0) D[i][i - 1] = A.lower(i);
        if (i + 1 < n) D[i][i + 1] = A.upper(i);
    }
    return D;
}

inline std::vector<double> dense_solve(std::vector<std::vector<double>> D,
                                       std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(D[r][col]) > std::abs(D[piv][col])) piv = r;
        if (D[piv][col] == 0.0) throw std::runtime_error("dense_solve: singular matrix");
        std::swap(D[col], D[piv]);
        std::swap(b[col], b[piv]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = D[r][col] / D[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) D[r][c] -= f * D[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= D[i][c] * x[c];
        x[i] = s / D[i][i];
    }
    return x;
}

inline std::vector<double> dense_solve(const TriDiag& A, const std::vector<double>& b) {
    return dense_solve(to_dense(A), b);
}

} // namespace radheat::testing
