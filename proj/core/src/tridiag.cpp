#include "radheat/tridiag.hpp"

#include <cmath>

namespace radheat {

TriDiag TriDiag::linear_combination(double a, const TriDiag& X, double b, const TriDiag& Y) {
    if (X.dim() != Y.dim())
        throw std::invalid_argument("TriDiag::linear_combination: dimension mismatch");
    TriDiag R(X.dim());
    for (std::size_t i = 0; i < X.dim(); ++i) {
        R.lower_[i] = a * X.lower_[i] + b * Y.lower_[i];
        R.diag_[i] = a * X.diag_[i] + b * Y.diag_[i];
        R.upper_[i] = a * X.upper_[i] + b * Y.upper_[i];
    }
    return R;
}

bool TriDiag::is_symmetric(double rel_tol) const {
    for (std::size_t i = 0; i + 1 < dim(); ++i) {
        const double d = std::abs(upper_[i] - lower_[i + 1]);
        const double s = std::max(std::abs(upper_[i]), std::abs(lower_[i + 1]));
        if (d > rel_tol * s) return false;
    }
    return true;
}

ThomasFactorization::ThomasFactorization(const TriDiag& A) {
    const std::size_t n = A.dim();
    lower_.resize(n);
    pivot_.resize(n);
    cprime_.resize(n);

    double piv = A.diag(0);
    double scale = std::abs(A.diag(0)) + (n > 1 ? std::abs(A.upper(0)) : 0.0);
    for (std::size_t i = 0;; ++i) {
        if (std::abs(piv) <= 1e-14 * scale || piv == 0.0)
            throw SingularSystemError("thomas_solve: pivot below 1e-14 of row scale at row " +
                                      std::to_string(i));
        pivot_[i] = piv;
        if (i + 1 == n) break;
        cprime_[i] = A.upper(i) / piv;
        lower_[i + 1] = A.lower(i + 1);
        piv = A.diag(i + 1) - A.lower(i + 1) * cprime_[i];
        scale = std::abs(A.lower(i + 1)) + std::abs(A.diag(i + 1)) +
                (i + 2 < n ? std::abs(A.upper(i + 1)) : 0.0);
    }
}

std::vector<double> ThomasFactorization::solve(const std::vector<double>& b) const {
    const std::size_t n = dim();
    if (b.size() != n)
        throw std::invalid_argument("ThomasFactorization::solve: dimension mismatch");
    std::vector<double> x(n);
    x[0] = b[0] / pivot_[0];
    for (std::size_t i = 1; i < n; ++i)
        x[i] = (b[i] - lower_[i] * x[i - 1]) / pivot_[i];
    for (std::size_t i = n - 1; i-- > 0;)
        x[i] -= cprime_[i] * x[i + 1];
    return x;
}

std::vector<double> thomas_solve(const TriDiag& A, const std::vector<double>& b) {
    if (A.dim() != b.size())
        throw std::invalid_argument("thomas_solve: dimension mismatch");
    return ThomasFactorization(A).solve(b);
}

std::vector<double> tridiag_matvec(const TriDiag& A, const std::vector<double>& x) {
    const std::size_t n = A.dim();
    if (x.size() != n)
        throw std::invalid_argument("tridiag_matvec: dimension mismatch");
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = A.diag(i) * x[i];
        if (i > 0) s += A.lower(i) * x[i - 1];
        if (i + 1 < n) s += A.upper(i) * x[i + 1];
        y[i] = s;
    }
    return y;
}

double tridiag_quadratic_form(const TriDiag& A, const std::vector<double>& x) {
    const std::vector<double> y = tridiag_matvec(A, x);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

} // namespace radheat
