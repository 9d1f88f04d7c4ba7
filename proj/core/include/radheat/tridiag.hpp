#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace radheat {

/// Raised when elimination meets a pivot too small to trust.
struct SingularSystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Tridiagonal matrix over the m free nodes. lower(0) and upper(m-1)
/// are stored but unused.
class TriDiag {
public:
    explicit TriDiag(std::size_t dim)
        : lower_(dim, 0.0), diag_(dim, 0.0), upper_(dim, 0.0) {
        if (dim == 0) throw std::invalid_argument("TriDiag: dim must be >= 1");
    }

    std::size_t dim() const { return diag_.size(); }

    double lower(std::size_t i) const { return lower_[i]; }
    double diag(std::size_t i) const { return diag_[i]; }
    double upper(std::size_t i) const { return upper_[i]; }

    double& lower(std::size_t i) { return lower_[i]; }
    double& diag(std::size_t i) { return diag_[i]; }
    double& upper(std::size_t i) { return upper_[i]; }

    /// Bandwise a*X + b*Y.
    static TriDiag linear_combination(double a, const TriDiag& X, double b, const TriDiag& Y);

    bool is_symmetric(double rel_tol = 0.0) const;

private:
    std::vector<double> lower_, diag_, upper_;
};

/// One-time Thomas elimination of A; solves repeated right-hand sides in
/// O(dim) each. Construction throws SingularSystemError when a pivot
/// magnitude falls below 1e-14 times the row scale.
class ThomasFactorization {
public:
    explicit ThomasFactorization(const TriDiag& A);

    std::size_t dim() const { return pivot_.size(); }
    std::vector<double> solve(const std::vector<double>& b) const;

    /// Diagonal pivots produced by the elimination (all positive for a
    /// positive-definite symmetric matrix).
    const std::vector<double>& pivots() const { return pivot_; }

private:
    std::vector<double> lower_;   // original subdiagonal
    std::vector<double> pivot_;   // eliminated diagonal
    std::vector<double> cprime_;  // upper / pivot
};

/// Direct solve of A x = b by the Thomas algorithm.
std::vector<double> thomas_solve(const TriDiag& A, const std::vector<double>& b);

/// Banded product A x.
std::vector<double> tridiag_matvec(const TriDiag& A, const std::vector<double>& x);

/// Quadratic form x^T A x.
double tridiag_quadratic_form(const TriDiag& A, const std::vector<double>& x);

} // namespace radheat
