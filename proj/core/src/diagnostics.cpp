#include "radheat/diagnostics.hpp"

#include "radheat/assembly.hpp"
#include "radheat/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace radheat {

double weighted_l2_norm(const NodalField& u, int dimension) {
    return weighted_l2_norm(u, assemble_mass_sym(u.mesh(), dimension));
}

double weighted_l2_norm(const NodalField& u, const TriDiag& mass) {
    const double q = tridiag_quadratic_form(mass, u.values_copy());
    return std::sqrt(std::max(q, 0.0));
}

double linf_norm(const NodalField& u, double sigma) {
    if (!(sigma >= 0.0 && sigma < 1.0))
        throw std::invalid_argument("linf_norm: sigma must lie in [0, 1)");
    // piecewise linear: extrema at nodes inside [sigma, 1] or at sigma itself
    double m = std::abs(u.eval(sigma));
    const Mesh& mesh = u.mesh();
    for (std::size_t j = 0; j <= mesh.element_count(); ++j)
        if (mesh.node(j) >= sigma) m = std::max(m, std::abs(u.node_value(j)));
    return m;
}

double l1_norm(const NodalField& u) {
    const Mesh& mesh = u.mesh();
    double total = 0.0;
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        const double h = mesh.width(e);
        const double va = u.node_value(e);
        const double vb = u.node_value(e + 1);
        if (va * vb >= 0.0) {
            total += 0.5 * h * (std::abs(va) + std::abs(vb));
        } else {
            // sign change at xi = a + h*|va|/(|va|+|vb|): two triangles
            const double wa = std::abs(va);
            const double wb = std::abs(vb);
            const double cut = h * wa / (wa + wb);
            total += 0.5 * (cut * wa + (h - cut) * wb);
        }
    }
    return total;
}

double discrete_energy(const NodalField& u, double alpha, int dimension) {
    return discrete_energy(u, alpha, dimension,
                           assemble_stiffness_sym(u.mesh(), dimension));
}

double discrete_energy(const NodalField& u, double alpha, int dimension,
                       const TriDiag& stiffness) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("discrete_energy: alpha must be > 0");
    const double gradient = 0.5 * tridiag_quadratic_form(stiffness, u.values_copy());

    const Mesh& mesh = u.mesh();
    const GaussRule rule = make_gauss_rule(8);
    const double p = alpha + 2.0;
    double potential = 0.0;
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        const double a = mesh.node(e);
        const double b = mesh.node(e + 1);
        const double va = u.node_value(e);
        const double vb = u.node_value(e + 1);
        potential += rule.integrate(a, b, [&](double x) {
            double w = 1.0;
            for (int k = 0; k < dimension - 1; ++k) w *= x;
            const double t = (x - a) / (b - a);
            return w * std::pow(std::abs(va + t * (vb - va)), p);
        });
    }
    return gradient - potential / p;
}

namespace {

// Exact prolongation of a coarse FE field onto a nested finer mesh.
NodalField prolongate_onto(const NodalField& coarse, const MeshPtr& fine) {
    const Mesh& cm = coarse.mesh();
    const Mesh& fm = *fine;
    // every coarse node must coincide with a fine node
    for (std::size_t j = 0; j <= cm.element_count(); ++j) {
        const double x = cm.node(j);
        const auto& fn = fm.nodes();
        auto it = std::lower_bound(fn.begin(), fn.end(), x - 1e-12);
        if (it == fn.end() || std::abs(*it - x) > 1e-12)
            throw std::invalid_argument(
                "error_vs_reference: coarse mesh nodes are not nested in the fine mesh");
    }
    std::vector<double> v(fm.free_node_count());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = coarse.eval(fm.node(j));
    return NodalField(fine, std::move(v));
}

} // namespace

ErrorReport error_vs_reference(const NodalField& coarse, const NodalField& fine,
                               int dimension, double sigma) {
    const NodalField lifted = prolongate_onto(coarse, fine.mesh_ptr());
    std::vector<double> dv(fine.size());
    for (std::size_t j = 0; j < dv.size(); ++j) dv[j] = fine[j] - lifted[j];
    const NodalField diff(fine.mesh_ptr(), std::move(dv));

    ErrorReport rep;
    rep.l1 = l1_norm(diff);
    rep.weighted_l2 = weighted_l2_norm(diff, dimension);
    rep.linf_full = linf_norm(diff, 0.0);
    rep.linf_interior = linf_norm(diff, sigma);
    rep.sigma = sigma;
    rep.h = coarse.mesh().h();
    rep.h_ref = fine.mesh().h();
    return rep;
}

std::vector<double> observed_orders(const std::vector<std::pair<int, double>>& errors) {
    std::vector<double> orders;
    for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
        const auto& [m0, e0] = errors[k];
        const auto& [m1, e1] = errors[k + 1];
        if (m1 <= m0)
            throw std::invalid_argument("observed_orders: m must be strictly increasing");
        if (!(e0 > 0.0) || !(e1 > 0.0))
            throw std::invalid_argument("observed_orders: errors must be positive");
        orders.push_back(std::log(e0 / e1) / std::log(double(m1) / double(m0)));
    }
    return orders;
}

std::string to_string(StopReason reason) {
    switch (reason) {
    case StopReason::none: return "none";
    case StopReason::reached_T: return "reached_T";
    case StopReason::blowup_threshold: return "blowup_threshold";
    case StopReason::step_failure: return "step_failure";
    }
    return "?";
}

StopReason blowup_monitor(const RunTrace& trace, double eps, double T) {
    if (!(eps > 0.0))
        throw std::invalid_argument("blowup_monitor: eps must be > 0");
    if (trace.rows.empty()) return StopReason::none;
    const TraceRow& row = trace.rows.back();
    if (row.l2h > 1.0 / eps) return StopReason::blowup_threshold;
    if (row.t >= T - 1e-12 * std::max(1.0, T)) return StopReason::reached_T;
    return StopReason::none;
}

void write_trace_csv(const RunTrace& trace, std::ostream& os) {
    os << "n,t_n,tau_n,l2h_norm,linf_norm,energy,min_nodal\n";
    char buf[256];
    for (const TraceRow& r : trace.rows) {
        std::snprintf(buf, sizeof buf, "%ld,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      r.n, r.t, r.tau, r.l2h, r.linf, r.energy, r.min_nodal);
        os << buf;
    }
    std::snprintf(buf, sizeof buf,
                  "# time_control: tau_min=%.17g tau_max=%.17g gamma=%.17g delta=%.17g\n",
                  trace.tau_min, trace.tau_max, trace.gamma, trace.delta);
    os << buf;
    os << "# stop_reason: " << to_string(trace.stop) << "\n";
}

} // namespace radheat
