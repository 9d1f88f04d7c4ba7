#include "radheat/scheme.hpp"

#include "radheat/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace radheat {

double ScalarFunction::dvalue(double x) const {
    if (derivative) return derivative(x);
    const double h = 1e-5;
    return (-value(x + 2 * h) + 8 * value(x + h) - 8 * value(x - h) + value(x - 2 * h)) /
           (12 * h);
}

namespace {

// r_i = A(w, phi_i) or B(w, phi_i), by per-element Gauss quadrature.
std::vector<double> ritz_rhs(const Mesh& mesh, int dimension, RitzForm form,
                             const ScalarFunction& w, int npts) {
    const std::size_t m = mesh.element_count();
    const GaussRule rule = make_gauss_rule(npts);
    const int weight = form == RitzForm::A ? dimension - 1 : 1;
    const double conv = form == RitzForm::B ? 2.0 - dimension : 0.0;
    std::vector<double> r(m, 0.0);
    for (std::size_t e = 0; e < m; ++e) {
        const double a = mesh.node(e);
        const double b = mesh.node(e + 1);
        const double h = mesh.width(e);
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * h;
        double left = 0.0, right = 0.0;
        for (int q = 0; q < rule.size(); ++q) {
            const double x = mid + half * rule.points[q];
            const double wq = half * rule.weights[q];
            const double dw = w.dvalue(x);
            double xw = 1.0;
            for (int p = 0; p < weight; ++p) xw *= x;
            // gradient term: int x^w w' phi_i'
            left += wq * xw * dw * (-1.0 / h);
            right += wq * xw * dw * (1.0 / h);
            if (conv != 0.0) {
                // convection term: (2-N) int w' phi_i
                left += wq * conv * dw * (b - x) / h;
                right += wq * conv * dw * (x - a) / h;
            }
        }
        r[e] += left;
        if (e + 1 < m) r[e + 1] += right;
    }
    return r;
}

} // namespace

NodalField ritz_projection(const MeshPtr& mesh, int dimension, RitzForm form,
                           const ScalarFunction& w, int npts) {
    if (!mesh) throw std::invalid_argument("ritz_projection: null mesh");
    if (dimension < 2)
        throw std::invalid_argument("ritz_projection: dimension must be >= 2");
    if (!w.value) throw std::invalid_argument("ritz_projection: missing function");

    const TriDiag K = form == RitzForm::A ? assemble_stiffness_sym(*mesh, dimension)
                                          : assemble_B(*mesh, dimension);
    const std::vector<double> r = ritz_rhs(*mesh, dimension, form, w, npts);
    return NodalField(mesh, thomas_solve(K, r));
}

NodalField initialize(const MeshPtr& mesh, const SchemeConfig& config,
                      const ScalarFunction& u0) {
    if (!mesh) throw std::invalid_argument("initialize: null mesh");
    if (!u0.value) throw std::invalid_argument("initialize: missing function");
    if (std::abs(u0.value(1.0)) > 1e-12)
        throw std::invalid_argument("initialize: u0(1) must vanish (incompatible boundary value)");

    switch (config.init) {
    case InitStrategy::interpolate: {
        std::vector<double> v(mesh->free_node_count());
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = u0.value(mesh->node(j));
        return NodalField(mesh, std::move(v));
    }
    case InitStrategy::ritz_a:
        return ritz_projection(mesh, config.dimension, RitzForm::A, u0);
    case InitStrategy::ritz_b:
        return ritz_projection(mesh, config.dimension, RitzForm::B, u0);
    case InitStrategy::weighted_l2: {
        const TriDiag M = assemble_mass_sym(*mesh, config.dimension);
        const std::vector<double> rhs =
            assemble_function_load(*mesh, config.dimension - 1, u0.value, 8);
        return NodalField(mesh, thomas_solve(M, rhs));
    }
    }
    throw std::logic_error("initialize: unknown strategy");
}

Stepper::Stepper(NodalField initial, SchemeConfig config, double t0)
    : config_(config),
      u_(std::move(initial)),
      t_(t0),
      mass_(config.variant == Variant::sym ? assemble_mass_sym(u_.mesh(), config.dimension)
                                           : assemble_mass_nonsym(u_.mesh())),
      op_(config.variant == Variant::sym
              ? assemble_stiffness_sym(u_.mesh(), config.dimension)
              : assemble_B(u_.mesh(), config.dimension)) {
    if (config_.load_quad_pts < 1)
        throw std::invalid_argument("Stepper: load_quad_pts must be >= 1");
}

const NodalField& Stepper::step(double tau) {
    if (!(tau > 0.0))
        throw std::invalid_argument("Stepper::step: tau must be > 0");

    const std::vector<double> F = assemble_load(
        u_.mesh(), config_.weight_exponent(), config_.f, u_, config_.load_quad_pts);

    std::vector<double> rhs = tridiag_matvec(mass_, u_.values_copy());
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += tau * F[i];

    if (!factorization_ || std::abs(tau - cached_tau_) > 1e-15 * tau) {
        factorization_.emplace(TriDiag::linear_combination(1.0, mass_, tau, op_));
        cached_tau_ = tau;
        ++refactorizations_;
    }

    u_ = NodalField(u_.mesh_ptr(), factorization_->solve(rhs));
    t_ += tau;
    ++n_;
    return u_;
}

} // namespace radheat
