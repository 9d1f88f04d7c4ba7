#pragma once

#include "radheat/field.hpp"
#include "radheat/tridiag.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace radheat {

/// Weighted L2 norm sqrt(int x^{N-1} u^2 dx), exact for FE fields.
double weighted_l2_norm(const NodalField& u, int dimension);
/// Same, with a pre-assembled x^{N-1} mass matrix.
double weighted_l2_norm(const NodalField& u, const TriDiag& mass);

/// max |u| over [sigma, 1]; sigma = 0 gives the full interval.
double linf_norm(const NodalField& u, double sigma = 0.0);

/// Exact integral of |u|, splitting elements at sign changes.
double l1_norm(const NodalField& u);

/// Discrete energy J_h = 1/2 ||u_x||^2 - 1/(alpha+2) int x^{N-1}|u|^{alpha+2} dx.
/// The gradient term is exact; the power term uses 8-point Gauss per element.
double discrete_energy(const NodalField& u, double alpha, int dimension);
double discrete_energy(const NodalField& u, double alpha, int dimension,
                       const TriDiag& stiffness);

struct ErrorReport {
    double l1 = 0.0;
    double weighted_l2 = 0.0;
    double linf_full = 0.0;
    double linf_interior = 0.0; // over [sigma, 1]
    double sigma = 0.0;
    double h = 0.0;       // coarse mesh size
    double h_ref = 0.0;   // reference mesh size
};

/// Error of a coarse field against a reference field on a nested finer
/// mesh. The coarse field is prolongated exactly onto the fine mesh and
/// the difference is measured there. Throws when meshes do not nest.
ErrorReport error_vs_reference(const NodalField& coarse, const NodalField& fine,
                               int dimension, double sigma);

/// order_k = log(e_k / e_{k+1}) / log(m_{k+1} / m_k) for consecutive
/// entries; with the usual doubling this is log2(e_k/e_{k+1}).
std::vector<double> observed_orders(const std::vector<std::pair<int, double>>& errors);

enum class StopReason { none, reached_T, blowup_threshold, step_failure };

std::string to_string(StopReason reason);

struct TraceRow {
    long n = 0;
    double t = 0.0;
    double tau = 0.0;
    double l2h = 0.0;       // discrete norm ||u||_2
    double linf = 0.0;
    double energy = 0.0;
    double min_nodal = 0.0; // over the free nodes
};

struct RunTrace {
    std::vector<TraceRow> rows;
    StopReason stop = StopReason::none;
    // time-increment diagnostics recomputed from the emitted sequence
    double tau_min = 0.0;
    double tau_max = 0.0;
    double gamma = 1.0;  // tau_max / tau_min
    double delta = 0.0;  // sup |tau_k - tau_{k+1}|
};

/// Stop decision from the last trace row: blowup_threshold once
/// ||u||_2 > 1/eps, reached_T once t_n >= T, none otherwise.
StopReason blowup_monitor(const RunTrace& trace, double eps, double T);

/// Columns n,t_n,tau_n,l2h_norm,linf_norm,energy,min_nodal followed by a
/// "# stop_reason: ..." footer. 17 significant digits.
void write_trace_csv(const RunTrace& trace, std::ostream& os);

} // namespace radheat
