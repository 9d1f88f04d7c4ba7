#pragma once

#include <functional>
#include <vector>

namespace radheat {

/// Gauss-Legendre rule on the reference interval (-1, 1).
/// An n-point rule integrates polynomials of degree <= 2n-1 exactly.
struct GaussRule {
    std::vector<double> points;
    std::vector<double> weights;

    int size() const { return static_cast<int>(points.size()); }
    int exactness_degree() const { return 2 * size() - 1; }

    /// Integral of g over (a, b) mapped from the reference interval.
    template <class F>
    double integrate(double a, double b, F&& g) const {
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        double sum = 0.0;
        for (std::size_t q = 0; q < points.size(); ++q)
            sum += weights[q] * g(mid + half * points[q]);
        return half * sum;
    }
};

/// Nodes and weights by Newton iteration on the Legendre polynomial.
/// Requires 1 <= npts <= 128.
GaussRule make_gauss_rule(int npts);

/// Closed form (b^{k+1} - a^{k+1}) / (k+1) for the monomial x^k.
/// Throws std::invalid_argument when a > b.
double weighted_monomial_integral(double a, double b, int k);

/// Gauss approximation of the weighted integral over (a, b) with an
/// already-built rule. Exact when x^w * g is a polynomial of degree
/// <= 2*npts - 1.
template <class F>
double weighted_integral(double a, double b, int weight_exponent, F&& g,
                         const GaussRule& rule) {
    return rule.integrate(a, b, [&](double x) {
        double w = 1.0;
        for (int p = 0; p < weight_exponent; ++p) w *= x;
        return w * g(x);
    });
}

/// Integral of x^{N-1} g(x) over (a, b) with an npts-point Gauss rule.
double element_weighted_integral(double a, double b, int dimension,
                                 const std::function<double(double)>& g, int npts);

} // namespace radheat
