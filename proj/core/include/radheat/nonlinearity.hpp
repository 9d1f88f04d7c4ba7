#pragma once

#include <string>

namespace radheat {

/// Reaction term f(u). Kinds:
///   zero            f = 0
///   affine          f(s) = lambda*s + c
///   power           f(s) = s*|s|^alpha
///   clipped_power   power inside |s| <= mu, linearly extended outside;
///                   globally Lipschitz with constant (1+alpha)*mu^alpha.
class Nonlinearity {
public:
    enum class Kind { zero, affine, power, clipped_power };

    static Nonlinearity zero();
    static Nonlinearity affine(double lambda, double c);
    static Nonlinearity power(double alpha);
    static Nonlinearity clipped_power(double alpha, double mu);

    double operator()(double s) const;

    Kind kind() const { return kind_; }
    double alpha() const { return alpha_; }
    double mu() const { return mu_; }
    double lambda() const { return lambda_; }
    double constant() const { return c_; }

    /// Lipschitz constant of the clipped extension, (1+alpha)*mu^alpha.
    double clipped_lipschitz_constant() const;

    std::string describe() const;

private:
    Nonlinearity() = default;

    Kind kind_ = Kind::zero;
    double alpha_ = 0.0;
    double mu_ = 0.0;
    double lambda_ = 0.0;
    double c_ = 0.0;
};

} // namespace radheat
