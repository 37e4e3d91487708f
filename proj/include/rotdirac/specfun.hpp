#pragma once

// Spherical Bessel functions of the first kind, their positive zeros, and
// orthonormalized associated Legendre functions.

#include <complex>
#include <utility>
#include <vector>

namespace rotdirac::specfun {

/// Upper bounds on Bessel order and root index accepted by this module.
struct Limits {
    int max_order = 200;
    int max_index = 500;
};

/// j_n(x) for 0 <= n <= limits.max_order and finite x >= 0.
///
/// Uses the closed forms for n <= 1, upward recurrence from (j_0, j_1) when
/// x >= n and Miller's downward recurrence otherwise.
double spherical_bessel_j(int n, double x, const Limits& limits = {});

/// (j_n(x), j_{n+1}(x)) from a single recurrence pass.
std::pair<double, double> spherical_bessel_pair(int n, double x, const Limits& limits = {});

/// j_n'(x), from j_n' = j_{n-1} - (n+1)/x j_n (and j_0' = -j_1).
double spherical_bessel_j_prime(int n, double x, const Limits& limits = {});

/// j_n(x) / j_{n+1}(x) evaluated without forming either factor, so it stays
/// finite where both functions underflow (x << n). Valid for 0 < x below the
/// first zero of j_{n+1}.
double spherical_bessel_quotient(int n, double x);

/// Positive zeros of j_n in increasing order.
struct BesselZeroTable {
    int order = 0;
    std::vector<double> zeros;
};

/// The i-th positive zero xi_{n,i} of j_n (i >= 1).
///
/// Zeros of order n are bracketed by consecutive zeros of order n-1
/// (xi_{n-1,i} < xi_{n,i} < xi_{n-1,i+1}), located by bisection and polished
/// with a guarded Newton step. Results are memoized process-wide.
double spherical_bessel_zero(int n, int i, const Limits& limits = {});

/// The first `count` zeros of j_n.
BesselZeroTable bessel_zero_table(int n, int count, const Limits& limits = {});

/// Orthonormal associated Legendre function with Condon-Shortley phase,
/// i.e. Y_{l,m}(theta, 0). Negative m is allowed.
double normalized_legendre(int l, int m, double theta);

/// |Y_{l,m}(theta, phi)|^2 (independent of phi).
double assoc_legendre_density(int l, int m, double theta);

/// Y_{l,m}(theta, phi) with Condon-Shortley phase.
std::complex<double> spherical_harmonic(int l, int m, double theta, double phi);

} // namespace rotdirac::specfun
