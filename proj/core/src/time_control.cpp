#include "radheat/time_control.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace radheat {

double discrete_l2h_norm(const NodalField& u, int dimension, bool allow_nonuniform) {
    if (dimension < 2)
        throw std::invalid_argument("discrete_l2h_norm: dimension must be >= 2");
    const Mesh& mesh = u.mesh();
    if (!allow_nonuniform && !mesh.is_uniform())
        throw std::invalid_argument(
            "discrete_l2h_norm: formula is defined for uniform meshes "
            "(pass allow_nonuniform to use the per-element width extension)");
    double sum = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        const double xr = mesh.node(j + 1);
        double w = mesh.width(j);
        for (int p = 0; p < dimension - 1; ++p) w *= xr;
        sum += w * u[j] * u[j];
    }
    return std::sqrt(sum);
}

TimeController::TimeController(Kind kind, double tau_base, double alpha)
    : kind_(kind), tau_base_(tau_base), alpha_(alpha) {
    if (!(tau_base > 0.0))
        throw std::invalid_argument("TimeController: tau_base must be > 0");
    if (kind == Kind::nakagawa && !(alpha > 0.0))
        throw std::invalid_argument("TimeController: alpha must be > 0");
}

TimeController TimeController::uniform(double tau) {
    return TimeController(Kind::uniform, tau, 0.0);
}

TimeController TimeController::nakagawa(double tau_base, double alpha) {
    return TimeController(Kind::nakagawa, tau_base, alpha);
}

double TimeController::next(double l2h_norm) {
    double tau = tau_base_;
    if (kind_ == Kind::nakagawa && l2h_norm > 0.0) {
        const double shrink = std::pow(l2h_norm, -alpha_);
        tau = tau_base_ * std::min(1.0, shrink);
    }
    history_.push_back(tau);
    return tau;
}

double TimeController::next(const NodalField& u, int dimension) {
    return next(discrete_l2h_norm(u, dimension));
}

double TimeController::tau_min() const {
    if (history_.empty()) return tau_base_;
    return *std::min_element(history_.begin(), history_.end());
}

double TimeController::tau_max() const {
    if (history_.empty()) return tau_base_;
    return *std::max_element(history_.begin(), history_.end());
}

double TimeController::gamma() const {
    return tau_max() / tau_min();
}

double TimeController::delta() const {
    double d = 0.0;
    for (std::size_t k = 0; k + 1 < history_.size(); ++k)
        d = std::max(d, std::abs(history_[k] - history_[k + 1]));
    return d;
}

} // namespace radheat
