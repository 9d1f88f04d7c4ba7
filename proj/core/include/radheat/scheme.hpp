#pragma once

#include "radheat/assembly.hpp"
#include "radheat/field.hpp"
#include "radheat/mesh.hpp"
#include "radheat/nonlinearity.hpp"
#include "radheat/tridiag.hpp"

#include <functional>
#include <optional>

namespace radheat {

enum class Variant { sym, nonsym };

enum class InitStrategy { interpolate, ritz_a, ritz_b, weighted_l2 };

struct SchemeConfig {
    int dimension = 2;
    Variant variant = Variant::sym;
    Nonlinearity f = Nonlinearity::zero();
    int load_quad_pts = 5;
    InitStrategy init = InitStrategy::interpolate;

    /// N-1 for (Sym), 1 for (Non-Sym).
    int weight_exponent() const {
        return variant == Variant::sym ? dimension - 1 : 1;
    }
};

/// A function together with its derivative; when the derivative is not
/// supplied, a 4th-order central difference stands in (used only inside
/// Ritz right-hand-side quadrature).
struct ScalarFunction {
    std::function<double(double)> value;
    std::function<double(double)> derivative;

    double dvalue(double x) const;
};

enum class RitzForm { A, B };

/// Projection onto S_h orthogonal in the A- or B-form:
///   A(Pw - w, chi) = 0   resp.   B(Pw - w, chi) = 0   for all chi in S_h.
/// Requires w(1) = 0 and a usable derivative.
NodalField ritz_projection(const MeshPtr& mesh, int dimension, RitzForm form,
                           const ScalarFunction& w, int npts = 8);

/// Discrete initial value u_h^0 from u0 per the configured strategy.
/// Throws std::invalid_argument unless |u0(1)| <= 1e-12.
NodalField initialize(const MeshPtr& mesh, const SchemeConfig& config,
                      const ScalarFunction& u0);

/// One backward-Euler step of (Sym) or (Non-Sym): the linear part is
/// implicit, f is evaluated at u^n. Owns the current state and caches
/// the factorization of M + tau*K keyed on tau.
class Stepper {
public:
    Stepper(NodalField initial, SchemeConfig config, double t0 = 0.0);

    const SchemeConfig& config() const { return config_; }
    const Mesh& mesh() const { return u_.mesh(); }
    const NodalField& current() const { return u_; }
    double time() const { return t_; }
    long step_index() const { return n_; }

    const TriDiag& mass() const { return mass_; }
    /// Stiffness matrix A for (Sym), B for (Non-Sym).
    const TriDiag& spatial_operator() const { return op_; }

    /// Advance by tau > 0; returns the new u^{n+1}.
    const NodalField& step(double tau);

    /// Number of factorizations so far; stays flat while tau repeats
    /// within 1e-15 relative.
    long refactorization_count() const { return refactorizations_; }

private:
    SchemeConfig config_;
    NodalField u_;
    double t_ = 0.0;
    long n_ = 0;
    TriDiag mass_;
    TriDiag op_;
    double cached_tau_ = -1.0;
    long refactorizations_ = 0;
    std::optional<ThomasFactorization> factorization_;
};

} // namespace radheat
