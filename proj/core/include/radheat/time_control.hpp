#pragma once

#include "radheat/field.hpp"

#include <vector>

namespace radheat {

/// Discrete norm ||u||_2 with ||u||_2^2 = sum_j h x_{j+1}^{N-1} u(x_j)^2.
/// The formula assumes one mesh width h, so nonuniform meshes are
/// rejected unless allow_nonuniform is set, which substitutes h_{j+1}
/// per term.
double discrete_l2h_norm(const NodalField& u, int dimension,
                         bool allow_nonuniform = false);

/// Emits the time-increment sequence: a constant tau, or Nakagawa's
/// control tau_n = tau_base * min{1, ||u_h^n||_2^{-alpha}}.
class TimeController {
public:
    enum class Kind { uniform, nakagawa };

    static TimeController uniform(double tau);
    static TimeController nakagawa(double tau_base, double alpha);

    Kind kind() const { return kind_; }
    double tau_base() const { return tau_base_; }
    double alpha() const { return alpha_; }

    /// Next increment given the current discrete norm; records it.
    double next(double l2h_norm);
    double next(const NodalField& u, int dimension);

    const std::vector<double>& history() const { return history_; }
    double tau_min() const;
    double tau_max() const;
    /// gamma = tau_max / tau_min (1 when no step was emitted yet).
    double gamma() const;
    /// delta = sup_k |tau_k - tau_{k+1}| over the emitted sequence.
    double delta() const;

private:
    TimeController(Kind kind, double tau_base, double alpha);

    Kind kind_;
    double tau_base_;
    double alpha_;
    std::vector<double> history_;
};

} // namespace radheat
