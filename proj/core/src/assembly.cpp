#include "radheat/assembly.hpp"

#include "radheat/quadrature.hpp"

#include <stdexcept>

namespace radheat {

namespace {

void require_dimension(int dimension) {
    if (dimension < 2)
        throw std::invalid_argument("assembly: dimension N must be >= 2");
}

// Adds the local 2x2 block for element e (nodes e, e+1) into the global
// tridiagonal matrix, dropping contributions of the Dirichlet node x_m.
void scatter_local(TriDiag& A, std::size_t e, std::size_t m, const double loc[2][2]) {
    for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
            const std::size_t i = e + static_cast<std::size_t>(p);
            const std::size_t j = e + static_cast<std::size_t>(q);
            if (i >= m || j >= m) continue;
            if (i == j)
                A.diag(i) += loc[p][q];
            else if (j == i + 1)
                A.upper(i) += loc[p][q];
            else
                A.lower(i) += loc[p][q];
        }
    }
}

// Weighted mass matrix int x^w phi_j phi_i dx, exact Gauss order.
TriDiag assemble_weighted_mass(const Mesh& mesh, int weight_exponent) {
    const std::size_t m = mesh.element_count();
    const GaussRule rule = make_gauss_rule(exact_quadrature_points(weight_exponent));
    TriDiag M(m);
    for (std::size_t e = 0; e < m; ++e) {
        const double a = mesh.node(e);
        const double b = mesh.node(e + 1);
        const double h = mesh.width(e);
        double loc[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * h;
        for (int q = 0; q < rule.size(); ++q) {
            const double x = mid + half * rule.points[q];
            double wx = half * rule.weights[q];
            for (int p = 0; p < weight_exponent; ++p) wx *= x;
            const double phiL = (b - x) / h;
            const double phiR = (x - a) / h;
            const double cross = wx * (phiL * phiR);
            loc[0][0] += wx * phiL * phiL;
            loc[0][1] += cross;
            loc[1][0] += cross;
            loc[1][1] += wx * phiR * phiR;
        }
        scatter_local(M, e, m, loc);
    }
    return M;
}

// Weighted stiffness int x^w phi_j' phi_i' dx.
TriDiag assemble_weighted_stiffness(const Mesh& mesh, int weight_exponent) {
    const std::size_t m = mesh.element_count();
    const GaussRule rule = make_gauss_rule(exact_quadrature_points(weight_exponent));
    TriDiag K(m);
    for (std::size_t e = 0; e < m; ++e) {
        const double a = mesh.node(e);
        const double b = mesh.node(e + 1);
        const double h = mesh.width(e);
        // int x^w dx over the element; slopes are -1/h and +1/h.
        double xw_int = 0.0;
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * h;
        for (int q = 0; q < rule.size(); ++q) {
            const double x = mid + half * rule.points[q];
            double wx = half * rule.weights[q];
            for (int p = 0; p < weight_exponent; ++p) wx *= x;
            xw_int += wx;
        }
        const double k = xw_int / (h * h);
        double loc[2][2] = {{k, -k}, {-k, k}};
        scatter_local(K, e, m, loc);
    }
    return K;
}

// Convection part int phi_j' phi_i dx (trial derivative, weight 1).
TriDiag assemble_convection(const Mesh& mesh) {
    const std::size_t m = mesh.element_count();
    const GaussRule rule = make_gauss_rule(exact_quadrature_points(0));
    TriDiag C(m);
    for (std::size_t e = 0; e < m; ++e) {
        const double a = mesh.node(e);
        const double b = mesh.node(e + 1);
        const double h = mesh.width(e);
        double loc[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * h;
        for (int q = 0; q < rule.size(); ++q) {
            const double x = mid + half * rule.points[q];
            const double wq = half * rule.weights[q];
            const double phiL = (b - x) / h;
            const double phiR = (x - a) / h;
            const double dL = -1.0 / h;
            const double dR = 1.0 / h;
            // loc[test][trial], trial differentiated
            loc[0][0] += wq * dL * phiL;
            loc[0][1] += wq * dR * phiL;
            loc[1][0] += wq * dL * phiR;
            loc[1][1] += wq * dR * phiR;
        }
        scatter_local(C, e, m, loc);
    }
    return C;
}

} // namespace

int exact_quadrature_points(int weight_exponent) {
    // integrand x^w * p1 * p1 has degree w + 2; n points are exact to 2n-1
    return (weight_exponent + 4) / 2;
}

TriDiag assemble_mass_sym(const Mesh& mesh, int dimension) {
    require_dimension(dimension);
    return assemble_weighted_mass(mesh, dimension - 1);
}

TriDiag assemble_stiffness_sym(const Mesh& mesh, int dimension) {
    require_dimension(dimension);
    return assemble_weighted_stiffness(mesh, dimension - 1);
}

TriDiag assemble_mass_nonsym(const Mesh& mesh) {
    return assemble_weighted_mass(mesh, 1);
}

TriDiag assemble_B(const Mesh& mesh, int dimension) {
    require_dimension(dimension);
    TriDiag Kx = assemble_weighted_stiffness(mesh, 1);
    if (dimension == 2) return Kx;
    const TriDiag C = assemble_convection(mesh);
    return TriDiag::linear_combination(1.0, Kx, 2.0 - dimension, C);
}

std::vector<double> assemble_load(const Mesh& mesh, int weight_exponent,
                                  const Nonlinearity& f, const NodalField& u,
                                  int npts) {
    if (u.size() != mesh.free_node_count())
        throw std::invalid_argument("assemble_load: field does not match mesh");
    if (weight_exponent < 1)
        throw std::invalid_argument("assemble load: weight exponent must be >= 1");
    if (npts < 1)
        throw std::invalid_argument("assemble load: npts must be >= 1");
    const std::size_t m = mesh.element_count();
    const GaussRule rule = make_gauss_rule(npts);
    std::vector<double> F(m, 0.0);
    for (std::size_t e = 0; e < m; ++e) {
        const double a = mesh.node(e);
        const double b = mesh.node(e + 1);
        const double h = mesh.width(e);
        const double va = u.node_value(e);
        const double vb = u.node_value(e + 1);
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * h;
        double left = 0.0, right = 0.0;
        for (int q = 0; q < rule.size(); ++q) {
            const double x = mid + half * rule.points[q];
            const double phiR = (x - a) / h;
            const double phiL = (b - x) / h;
            double wx = half * rule.weights[q];
            for (int p = 0; p < weight_exponent; ++p) wx *= x;
            const double fq = wx * f(va + phiR * (vb - va));
            left += fq * phiL;
            right += fq * phiR;
        }
        F[e] += left;
        if (e + 1 < m) F[e + 1] += right;
    }
    return F;
}

Nonlinearity clipped_power_for_field(double alpha, const NodalField& u) {
    return Nonlinearity::clipped_power(alpha, 1.0 + u.max_abs_value());
}

std::vector<double> assemble_function_load(const Mesh& mesh, int weight_exponent,
                                           const std::function<double(double)>& g,
                                           int npts) {
    if (weight_exponent < 1)
        throw std::invalid_argument("assemble load: weight exponent must be >= 1");
    if (npts < 1)
        throw std::invalid_argument("assemble load: npts must be >= 1");
    const std::size_t m = mesh.element_count();
    const GaussRule rule = make_gauss_rule(npts);
    std::vector<double> F(m, 0.0);
    for (std::size_t e = 0; e < m; ++e) {
        const double a = mesh.node(e);
        const double b = mesh.node(e + 1);
        const double h = mesh.width(e);
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * h;
        double left = 0.0, right = 0.0;
        for (int q = 0; q < rule.size(); ++q) {
            const double x = mid + half * rule.points[q];
            double wx = half * rule.weights[q];
            for (int p = 0; p < weight_exponent; ++p) wx *= x;
            const double gq = wx * g(x);
            left += gq * (b - x) / h;
            right += gq * (x - a) / h;
        }
        F[e] += left;
        if (e + 1 < m) F[e + 1] += right;
    }
    return F;
}

} // namespace radheat
