#pragma once

#include <functional>
#include <vector>

namespace rotdirac {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point rule; nodes in increasing order. Exact for polynomials of degree 2n-1.
GaussLegendre gauss_legendre(int n);

/// Same rule mapped onto [a, b].
GaussLegendre gauss_legendre(int n, double a, double b);

/// Integral of f over [a, b] with an n-point rule.
double integrate(const std::function<double(double)>& f, double a, double b, int n);

} // namespace rotdirac
