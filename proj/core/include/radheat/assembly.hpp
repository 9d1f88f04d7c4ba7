#pragma once

#include "radheat/field.hpp"
#include "radheat/mesh.hpp"
#include "radheat/nonlinearity.hpp"
#include "radheat/tridiag.hpp"

#include <functional>
#include <vector>

namespace radheat {

/// Mass matrix in the x^{N-1}-weighted inner product,
/// entries (phi_j, phi_i) = int x^{N-1} phi_j phi_i dx. Requires N >= 2.
TriDiag assemble_mass_sym(const Mesh& mesh, int dimension);

/// Stiffness matrix A(phi_j, phi_i) = int x^{N-1} phi_j' phi_i' dx.
TriDiag assemble_stiffness_sym(const Mesh& mesh, int dimension);

/// Mass matrix with weight x; identical to assemble_mass_sym(mesh, 2).
TriDiag assemble_mass_nonsym(const Mesh& mesh);

/// B(phi_j, phi_i) = int x phi_j' phi_i' dx + (2-N) int phi_j' phi_i dx.
/// Nonsymmetric for N != 2.
TriDiag assemble_B(const Mesh& mesh, int dimension);

/// Load vector with entries int x^w f(u_h) phi_j dx, w = N-1 for (Sym)
/// and w = 1 for (Non-Sym). npts Gauss points per element.
std::vector<double> assemble_load(const Mesh& mesh, int weight_exponent,
                                  const Nonlinearity& f, const NodalField& u,
                                  int npts);

/// Load vector int x^w g(x) phi_j dx for an arbitrary integrand g.
std::vector<double> assemble_function_load(const Mesh& mesh, int weight_exponent,
                                           const std::function<double(double)>& g,
                                           int npts);

/// Clipped power with the default truncation mu = 1 + sup|u|, so the clip
/// is inactive on the current field.
Nonlinearity clipped_power_for_field(double alpha, const NodalField& u);

/// Gauss order that integrates x^w * (linear) * (linear) exactly.
int exact_quadrature_points(int weight_exponent);

} // namespace radheat
