#include "rotdirac/quadrature.hpp"

#include "rotdirac/errors.hpp"

#include <cmath>
#include <numbers>

namespace rotdirac {

GaussLegendre gauss_legendre(int n) {
    if (n < 1) {
        throw DomainError("Gauss-Legendre rule needs at least one node");
    }
    GaussLegendre rule;
    if (n == 1) {
        rule.nodes = {0.0};
        rule.weights = {2.0};
        return rule;
    }
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int k = 0; k < (n + 1) / 2; ++k) {
        double x = std::cos(std::numbers::pi * (k + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int l = 2; l <= n; ++l) {
                const double p2 = ((2.0 * l - 1.0) * x * p1 - (l - 1.0) * p0) / l;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[k] = -x;
        rule.nodes[n - 1 - k] = x;
        rule.weights[k] = w;
        rule.weights[n - 1 - k] = w;
    }
    return rule;
}

GaussLegendre gauss_legendre(int n, double a, double b) {
    GaussLegendre rule = gauss_legendre(n);
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    for (int k = 0; k < n; ++k) {
        rule.nodes[k] = mid + half * rule.nodes[k];
        rule.weights[k] *= half;
    }
    return rule;
}

double integrate(const std::function<double(double)>& f, double a, double b, int n) {
    const GaussLegendre rule = gauss_legendre(n, a, b);
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        sum += rule.weights[k] * f(rule.nodes[k]);
    }
    return sum;
}

} // namespace rotdirac
