#include "radheat/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace radheat {

GaussRule make_gauss_rule(int npts) {
    if (npts < 1 || npts > 128)
        throw std::invalid_argument("make_gauss_rule: npts must be in [1, 128]");

    GaussRule rule;
    rule.points.resize(npts);
    rule.weights.resize(npts);

    const int n = npts;
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-based initial guess for the i-th root of P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence for P_n(x) and P_n'(x).
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                // one polishing step
                p0 = 1.0;
                p1 = x;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                x -= p1 / dp;
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.points[i] = -x;
        rule.weights[i] = w;
        rule.points[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.points[n / 2] = 0.0;
    return rule;
}

double weighted_monomial_integral(double a, double b, int k) {
    if (a > b)
        throw std::invalid_argument("weighted_monomial_integral: need a <= b");
    if (k < 0)
        throw std::invalid_argument("weighted_monomial_integral: need k >= 0");
    auto ipow = [](double base, int e) {
        double r = 1.0;
        for (int i = 0; i < e; ++i) r *= base;
        return r;
    };
    return (ipow(b, k + 1) - ipow(a, k + 1)) / (k + 1);
}

double element_weighted_integral(double a, double b, int dimension,
                                 const std::function<double(double)>& g, int npts) {
    if (dimension < 2)
        throw std::invalid_argument("element_weighted_integral: dimension must be >= 2");
    if (npts < 1)
        throw std::invalid_argument("element_weighted_integral: npts must be >= 1");
    if (a > b)
        throw std::invalid_argument("element_weighted_integral: need a <= b");
    const GaussRule rule = make_gauss_rule(npts);
    return weighted_integral(a, b, dimension - 1, g, rule);
}

} // namespace radheat
