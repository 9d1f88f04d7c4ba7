#include "radheat/props.hpp"

#include "radheat/assembly.hpp"
#include "radheat/diagnostics.hpp"
#include "radheat/quadrature.hpp"
#include "radheat/scheme.hpp"
#include "radheat/time_control.hpp"

#include <cmath>
#include <cstdio>
#include <random>

namespace radheat {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

MeshPtr random_mesh(std::mt19937& rng, std::size_t max_m) {
    std::uniform_int_distribution<std::size_t> md(2, max_m);
    std::uniform_real_distribution<double> gd(1.0, 2.5);
    const std::size_t m = md(rng);
    if (rng() % 2 == 0) return make_uniform_mesh(m);
    return make_graded_mesh(m, gd(rng));
}

std::vector<double> random_values(std::mt19937& rng, std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> vd(lo, hi);
    std::vector<double> v(n);
    for (double& x : v) x = vd(rng);
    return v;
}

// Per-entry band integration with a high-order rule, independent of the
// element-loop assembly path.
double band_entry_oracle(const Mesh& mesh, int weight, std::size_t i, std::size_t j,
                         bool derivatives) {
    const GaussRule rule = make_gauss_rule(16);
    auto hat = [&](std::size_t k, double x) -> double {
        const double xk = mesh.node(k);
        if (k > 0 && x >= mesh.node(k - 1) && x <= xk)
            return (x - mesh.node(k - 1)) / mesh.width(k - 1);
        if (x >= xk && x <= mesh.node(k + 1)) return (mesh.node(k + 1) - x) / mesh.width(k);
        return 0.0;
    };
    auto hat_dx = [&](std::size_t k, double x) -> double {
        const double xk = mesh.node(k);
        if (k > 0 && x >= mesh.node(k - 1) && x < xk) return 1.0 / mesh.width(k - 1);
        if (x >= xk && x < mesh.node(k + 1)) return -1.0 / mesh.width(k);
        return 0.0;
    };
    double sum = 0.0;
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        const double a = mesh.node(e);
        const double b = mesh.node(e + 1);
        sum += rule.integrate(a, b, [&](double x) {
            double w = 1.0;
            for (int p = 0; p < weight; ++p) w *= x;
            const double fi = derivatives ? hat_dx(i, x) : hat(i, x);
            const double fj = derivatives ? hat_dx(j, x) : hat(j, x);
            return w * fi * fj;
        });
    }
    return sum;
}

PropResult check_mass_stiffness_oracle() {
    PropResult r{"assembly matches per-entry quadrature oracle", true, ""};
    double worst = 0.0;
    for (int N : {2, 3, 5}) {
        for (const MeshPtr& mesh : {make_uniform_mesh(7), make_graded_mesh(9, 2.0)}) {
            const TriDiag M = assemble_mass_sym(*mesh, N);
            const TriDiag A = assemble_stiffness_sym(*mesh, N);
            const std::size_t m = mesh->free_node_count();
            for (std::size_t i = 0; i < m; ++i) {
                worst = std::max(worst, std::abs(M.diag(i) - band_entry_oracle(*mesh, N - 1, i, i, false)));
                worst = std::max(worst, std::abs(A.diag(i) - band_entry_oracle(*mesh, N - 1, i, i, true)));
                if (i + 1 < m) {
                    worst = std::max(worst, std::abs(M.upper(i) - band_entry_oracle(*mesh, N - 1, i, i + 1, false)));
                    worst = std::max(worst, std::abs(A.upper(i) - band_entry_oracle(*mesh, N - 1, i, i + 1, true)));
                }
            }
        }
    }
    r.pass = worst <= 1e-13;
    r.detail = fmt("max band deviation %.3g (tol 1e-13)", worst);
    return r;
}

PropResult check_stiffness_row_sums() {
    PropResult r{"interior stiffness rows sum to zero", true, ""};
    double worst = 0.0;
    for (int N : {2, 3, 4, 5}) {
        const MeshPtr mesh = make_graded_mesh(17, 1.7);
        const TriDiag A = assemble_stiffness_sym(*mesh, N);
        for (std::size_t i = 0; i + 1 < A.dim(); ++i) {
            double s = A.diag(i) + A.upper(i);
            if (i > 0) s += A.lower(i);
            worst = std::max(worst, std::abs(s) / std::abs(A.diag(i)));
        }
    }
    r.pass = worst <= 1e-13;
    r.detail = fmt("max relative row sum %.3g (tol 1e-13)", worst);
    return r;
}

PropResult check_tau_bound() {
    PropResult r{"-mu/a off-diagonal ratio bounded by h^2/4", true, ""};
    double worst = 0.0;
    for (int N : {2, 3, 4, 5}) {
        for (const MeshPtr& mesh : {make_uniform_mesh(23), make_graded_mesh(23, 2.2)}) {
            const TriDiag M = assemble_mass_sym(*mesh, N);
            const TriDiag A = assemble_stiffness_sym(*mesh, N);
            const double bound = 0.25 * mesh->h() * mesh->h();
            for (std::size_t i = 0; i + 1 < M.dim(); ++i) {
                worst = std::max(worst, -M.upper(i) / A.upper(i) - bound);
                worst = std::max(worst, -M.lower(i + 1) / A.lower(i + 1) - bound);
            }
        }
    }
    r.pass = worst <= 1e-15;
    r.detail = fmt("max excess over h^2/4: %.3g", worst);
    return r;
}

PropResult check_coercivity_identity(std::mt19937& rng) {
    PropResult r{"B quadratic form equals weight-x stiffness plus boundary term", true, ""};
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const MeshPtr mesh = random_mesh(rng, 32);
        std::uniform_int_distribution<int> nd(2, 5);
        const int N = nd(rng);
        const TriDiag B = assemble_B(*mesh, N);
        const TriDiag Kx = assemble_stiffness_sym(*mesh, 2);
        const std::vector<double> w = random_values(rng, mesh->free_node_count(), -1.0, 1.0);
        const double lhs = tridiag_quadratic_form(B, w);
        const double rhs = tridiag_quadratic_form(Kx, w) + 0.5 * (N - 2) * w[0] * w[0];
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    }
    r.pass = worst <= 1e-12;
    r.detail = fmt("max relative identity defect %.3g (tol 1e-12)", worst);
    return r;
}

PropResult check_poincare(std::mt19937& rng) {
    PropResult r{"discrete Poincare: <w,w> <= <w_x,w_x>", true, ""};
    double worst = -1.0;
    for (int trial = 0; trial < 200; ++trial) {
        const MeshPtr mesh = random_mesh(rng, 32);
        const TriDiag Mx = assemble_mass_nonsym(*mesh);
        const TriDiag Kx = assemble_stiffness_sym(*mesh, 2);
        const std::vector<double> w = random_values(rng, mesh->free_node_count(), -1.0, 1.0);
        worst = std::max(worst, tridiag_quadratic_form(Mx, w) - tridiag_quadratic_form(Kx, w));
    }
    r.pass = worst <= 0.0;
    r.detail = fmt("max <w,w> - <w_x,w_x>: %.3g", worst);
    return r;
}

PropResult check_positivity(std::mt19937& rng) {
    PropResult r{"positivity of (Sym) under tau = h^2/4", true, ""};
    double worst = 0.0;
    std::uniform_int_distribution<int> nd(2, 5);
    std::uniform_real_distribution<double> ad(0.5, 4.0);
    for (int trial = 0; trial < 200; ++trial) {
        const MeshPtr mesh = random_mesh(rng, 64);
        SchemeConfig sc;
        sc.dimension = nd(rng);
        sc.variant = Variant::sym;
        sc.f = Nonlinearity::power(ad(rng));
        Stepper stepper(NodalField(mesh, random_values(rng, mesh->free_node_count(), 0.0, 10.0)), sc);
        const double tau = 0.25 * mesh->h() * mesh->h();
        worst = std::min(worst, stepper.step(tau).min_value());
    }
    r.pass = worst >= -1e-12;
    r.detail = fmt("min component %.3g (tol -1e-12)", worst);
    return r;
}

PropResult check_comparison(std::mt19937& rng) {
    PropResult r{"comparison principle for (Sym)", true, ""};
    double worst = 0.0;
    std::uniform_int_distribution<int> nd(2, 5);
    std::uniform_real_distribution<double> ad(0.5, 4.0);
    for (int trial = 0; trial < 200; ++trial) {
        const MeshPtr mesh = random_mesh(rng, 64);
        SchemeConfig sc;
        sc.dimension = nd(rng);
        sc.variant = Variant::sym;
        sc.f = Nonlinearity::power(ad(rng));
        const std::size_t m = mesh->free_node_count();
        std::vector<double> lo = random_values(rng, m, -4.0, 4.0);
        std::vector<double> hi = lo;
        const std::vector<double> bump = random_values(rng, m, 0.0, 2.0);
        for (std::size_t j = 0; j < m; ++j) hi[j] += bump[j];
        const double tau = 0.25 * mesh->h() * mesh->h();
        Stepper slo(NodalField(mesh, lo), sc);
        Stepper shi(NodalField(mesh, hi), sc);
        const NodalField& ulo = slo.step(tau);
        const NodalField& uhi = shi.step(tau);
        for (std::size_t j = 0; j < m; ++j) worst = std::max(worst, ulo[j] - uhi[j]);
    }
    r.pass = worst <= 1e-12;
    r.detail = fmt("max ordering violation %.3g (tol 1e-12)", worst);
    return r;
}

PropResult check_n2_crosscheck(std::mt19937& rng) {
    PropResult r{"(Sym) and (Non-Sym) coincide at N=2", true, ""};
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const MeshPtr mesh = random_mesh(rng, 48);
        const std::vector<double> v = random_values(rng, mesh->free_node_count(), -2.0, 2.0);
        SchemeConfig sym{2, Variant::sym, Nonlinearity::power(1.5), 5, InitStrategy::interpolate};
        SchemeConfig non{2, Variant::nonsym, Nonlinearity::power(1.5), 5, InitStrategy::interpolate};
        Stepper a(NodalField(mesh, v), sym);
        Stepper b(NodalField(mesh, v), non);
        const double tau = 0.5 * mesh->h() * mesh->h();
        const NodalField& ua = a.step(tau);
        const NodalField& ub = b.step(tau);
        for (std::size_t j = 0; j < ua.size(); ++j)
            worst = std::max(worst, std::abs(ua[j] - ub[j]));
    }
    r.pass = worst <= 1e-11;
    r.detail = fmt("max nodal difference %.3g (tol 1e-11)", worst);
    return r;
}

PropResult check_thomas_roundtrip(std::mt19937& rng) {
    PropResult r{"Thomas solve round trip on diagonally dominant systems", true, ""};
    double worst = 0.0;
    std::uniform_int_distribution<std::size_t> sized(1, 400);
    std::uniform_real_distribution<double> vd(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = sized(rng);
        TriDiag A(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0) A.lower(i) = vd(rng);
            if (i + 1 < n) A.upper(i) = vd(rng);
            A.diag(i) = 2.5 + std::abs(vd(rng));
        }
        std::vector<double> x(n);
        for (double& v : x) v = vd(rng);
        const std::vector<double> got = thomas_solve(A, tridiag_matvec(A, x));
        for (std::size_t i = 0; i < n; ++i)
            worst = std::max(worst, std::abs(got[i] - x[i]) / std::max(1.0, std::abs(x[i])));
    }
    r.pass = worst <= 1e-9;
    r.detail = fmt("max relative error %.3g (tol 1e-9)", worst);
    return r;
}

PropResult check_energy_monotonicity(std::mt19937& rng) {
    PropResult r{"discrete energy nonincreasing along (Sym) runs", true, ""};
    double worst = 0.0;
    std::uniform_real_distribution<double> ad(1.0, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        const MeshPtr mesh = make_uniform_mesh(20 + 4 * (rng() % 8));
        const double alpha = ad(rng);
        SchemeConfig sc;
        sc.dimension = 3;
        sc.variant = Variant::sym;
        sc.f = Nonlinearity::power(alpha);
        Stepper stepper(NodalField(mesh, random_values(rng, mesh->free_node_count(), 0.0, 2.0)), sc);
        const TriDiag& K = stepper.spatial_operator();
        double prev = discrete_energy(stepper.current(), alpha, 3, K);
        std::uniform_real_distribution<double> td(1e-6, 5e-3);
        for (int n = 0; n < 25; ++n) {
            const double J = discrete_energy(stepper.step(td(rng)), alpha, 3, K);
            worst = std::max(worst, J - prev);
            prev = J;
        }
    }
    r.pass = worst <= 1e-12;
    r.detail = fmt("max energy increase %.3g (tol 1e-12)", worst);
    return r;
}

} // namespace

std::vector<PropResult> run_property_suite(unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<PropResult> results;
    results.push_back(check_mass_stiffness_oracle());
    results.push_back(check_stiffness_row_sums());
    results.push_back(check_tau_bound());
    results.push_back(check_coercivity_identity(rng));
    results.push_back(check_poincare(rng));
    results.push_back(check_positivity(rng));
    results.push_back(check_comparison(rng));
    results.push_back(check_n2_crosscheck(rng));
    results.push_back(check_thomas_roundtrip(rng));
    results.push_back(check_energy_monotonicity(rng));
    return results;
}

} // namespace radheat
