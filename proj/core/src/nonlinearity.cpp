#include "radheat/nonlinearity.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace radheat {

Nonlinearity Nonlinearity::zero() {
    return Nonlinearity{};
}

Nonlinearity Nonlinearity::affine(double lambda, double c) {
    Nonlinearity f;
    f.kind_ = Kind::affine;
    f.lambda_ = lambda;
    f.c_ = c;
    return f;
}

Nonlinearity Nonlinearity::power(double alpha) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("Nonlinearity::power: alpha must be > 0");
    Nonlinearity f;
    f.kind_ = Kind::power;
    f.alpha_ = alpha;
    return f;
}

Nonlinearity Nonlinearity::clipped_power(double alpha, double mu) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("Nonlinearity::clipped_power: alpha must be > 0");
    if (!(mu > 0.0))
        throw std::invalid_argument("Nonlinearity::clipped_power: mu must be > 0");
    Nonlinearity f;
    f.kind_ = Kind::clipped_power;
    f.alpha_ = alpha;
    f.mu_ = mu;
    return f;
}

double Nonlinearity::operator()(double s) const {
    switch (kind_) {
    case Kind::zero:
        return 0.0;
    case Kind::affine:
        return lambda_ * s + c_;
    case Kind::power:
        return s * std::pow(std::abs(s), alpha_);
    case Kind::clipped_power: {
        const double as = std::abs(s);
        if (as <= mu_) return s * std::pow(as, alpha_);
        const double sgn = s > 0.0 ? 1.0 : -1.0;
        return ((1.0 + alpha_) * std::pow(mu_, alpha_) * as - alpha_ * std::pow(mu_, 1.0 + alpha_)) * sgn;
    }
    }
    return 0.0;
}

double Nonlinearity::clipped_lipschitz_constant() const {
    if (kind_ != Kind::clipped_power)
        throw std::logic_error("clipped_lipschitz_constant: not a clipped-power nonlinearity");
    return (1.0 + alpha_) * std::pow(mu_, alpha_);
}

std::string Nonlinearity::describe() const {
    char buf[96];
    switch (kind_) {
    case Kind::zero:
        return "zero";
    case Kind::affine:
        std::snprintf(buf, sizeof buf, "affine(%g, %g)", lambda_, c_);
        return buf;
    case Kind::power:
        std::snprintf(buf, sizeof buf, "power(%g)", alpha_);
        return buf;
    case Kind::clipped_power:
        std::snprintf(buf, sizeof buf, "clipped_power(%g, %g)", alpha_, mu_);
        return buf;
    }
    return "?";
}

} // namespace radheat
