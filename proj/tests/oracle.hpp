#pragma once

// Independent reference implementations for the tests. Nothing here calls
// into the library: Bessel functions come from Boost, spherical harmonics
// from std::sph_legendre, roots from a dense sign scan, normalizations from
// composite Gauss-Kronrod quadrature, and the condensate from the plain
// unreduced mode sum.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace oracle {

inline double sph_j(int n, double x) {
    if (x == 0.0) {
        return n == 0 ? 1.0 : 0.0;
    }
    return boost::math::sph_bessel(static_cast<unsigned>(n), x);
}

/// Y_{l,m}(theta, 0), Condon-Shortley phase, any sign of m.
inline double ylm(int l, int m, double theta) {
    if (std::abs(m) > l) {
        return 0.0;
    }
    const double v = std::sph_legendre(l, std::abs(m), theta);
    return (m < 0 && std::abs(m) % 2 == 1) ? -v : v;
}

/// First `count` sign changes of f on a uniform grid of spacing `step`
/// starting at `start`, each refined by bisection.
inline std::vector<double> scan_roots(const std::function<double(double)>& f, double start,
                                      double step, int count, double limit = 1e4) {
    std::vector<double> roots;
    double a = start;
    double fa = f(a);
    while (static_cast<int>(roots.size()) < count) {
        const double b = a + step;
        if (b > limit) {
            throw std::runtime_error("scan_roots: limit reached");
        }
        const double fb = f(b);
        if (fa == 0.0) {
            roots.push_back(a);
        } else if ((fa < 0.0) != (fb < 0.0) && fb != 0.0) {
            double lo = a;
            double hi = b;
            double flo = fa;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) {
                    break;
                }
                const double fm = f(mid);
                if ((fm < 0.0) == (flo < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        a = b;
        fa = fb;
    }
    return roots;
}

inline std::vector<double> bessel_zeros(int n, int count) {
    return scan_roots([n](double x) { return sph_j(n, x); }, 1e-3, 1e-3, count);
}

/// MIT condition (E+M) j_l(pR) - sgn(kappa) varsigma p j_lbar(pR) scanned in x = pR.
inline std::vector<double> mit_roots(int two_j, int kappa, int esign, double radius, double mass,
                                     int varsigma, int count) {
    const int n = (two_j - 1) / 2;
    const int l = kappa > 0 ? n : n + 1;
    const int lbar = kappa > 0 ? n + 1 : n;
    const double s = (kappa > 0 ? 1.0 : -1.0) * varsigma;
    auto f = [&](double x) {
        const double p = x / radius;
        const double e = esign * std::sqrt(p * p + mass * mass);
        return (e + mass) * sph_j(l, x) - s * p * sph_j(lbar, x);
    };
    std::vector<double> xs = scan_roots(f, 1e-3, 1e-3, count);
    for (double& x : xs) {
        x /= radius;
    }
    return xs;
}

struct Mode {
    int esign;
    int two_j;
    int two_mj;
    int kappa;
    double p;
    double mass;
};

inline double energy(const Mode& k) { return k.esign * std::sqrt(k.p * k.p + k.mass * k.mass); }

/// (f, g/i) radial amplitudes, written out from the mode solution.
inline std::pair<double, double> radial(const Mode& k, double r) {
    const int n = (k.two_j - 1) / 2;
    const int l = k.kappa > 0 ? n : n + 1;
    const int lbar = k.kappa > 0 ? n + 1 : n;
    const double e = energy(k);
    const double f = std::sqrt((e + k.mass) / (2.0 * e)) * sph_j(l, k.p * r);
    const double g = (e > 0 ? 1.0 : -1.0) * (k.kappa > 0 ? 1.0 : -1.0) *
                     std::sqrt((e - k.mass) / (2.0 * e)) * sph_j(lbar, k.p * r);
    return {f, g};
}

/// Two-spinor harmonics at phi = 0: chi^+ (l = j - 1/2) and chi^- (l = j + 1/2).
inline std::pair<std::array<double, 2>, std::array<double, 2>> spinor_harmonics(int two_j,
                                                                                int two_mj,
                                                                                double theta) {
    const double j = 0.5 * two_j;
    const double m = 0.5 * two_mj;
    const int lp = (two_j - 1) / 2;
    const int lm = (two_j + 1) / 2;
    const int down = (two_mj - 1) / 2;
    const int up = (two_mj + 1) / 2;
    std::array<double, 2> plus = {std::sqrt((j + m) / (2 * j)) * ylm(lp, down, theta),
                                  std::sqrt((j - m) / (2 * j)) * ylm(lp, up, theta)};
    std::array<double, 2> minus = {std::sqrt((j - m + 1) / (2 * j + 2)) * ylm(lm, down, theta),
                                   -std::sqrt((j + m + 1) / (2 * j + 2)) * ylm(lm, up, theta)};
    return {plus, minus};
}

/// Unnormalized four-spinor at (r, theta, phi = 0).
inline std::array<std::complex<double>, 4> spinor(const Mode& k, double r, double theta) {
    const auto [f, g] = radial(k, r);
    const auto [plus, minus] = spinor_harmonics(k.two_j, k.two_mj, theta);
    const auto& upper = k.kappa > 0 ? plus : minus;
    const auto& lower = k.kappa > 0 ? minus : plus;
    const std::complex<double> ig(0.0, g);
    return {f * upper[0], f * upper[1], ig * lower[0], ig * lower[1]};
}

inline double scalar_density(const Mode& k, double r, double theta) {
    const auto psi = spinor(k, r, theta);
    return std::norm(psi[0]) + std::norm(psi[1]) - std::norm(psi[2]) - std::norm(psi[3]);
}

/// C from int_0^R r^2 (f^2 + g^2) dr = 1/C^2 (the spinor harmonics are unit normalized).
inline double quadrature_norm(const Mode& k, double radius) {
    auto integrand = [&](double r) {
        const auto [f, g] = radial(k, r);
        return r * r * (f * f + g * g);
    };
    // Fixed composite 61-point rule; the integrand is entire, 16 panels are
    // far more than enough for pR below a few hundred.
    constexpr int panels = 16;
    double v = 0.0;
    for (int k = 0; k < panels; ++k) {
        const double a = radius * k / panels;
        const double b = radius * (k + 1) / panels;
        v += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, a, b, 0);
    }
    return 1.0 / std::sqrt(v);
}

inline double fermi(double x) { return x > 0 ? std::exp(-x) / (1 + std::exp(-x)) : 1 / (1 + std::exp(x)); }

struct Physics {
    bool mit = false;
    int varsigma = 1;
    double mass = 1.0;
    double radius = 1.0;
    double omega = 0.0;
    double beta = 1.0;
    double mu = 0.0;
};

/// -sum_k |C_k|^2 w'(E~_k) psibar_k psi_k over every j <= two_j_max/2, m_j,
/// kappa, i <= i_max and both energy signs, with no symmetry reductions.
class BruteForce {
public:
    BruteForce(const Physics& ph, int two_j_max, int i_max)
        : ph_(ph), two_j_max_(two_j_max), i_max_(i_max) {}

    double value(double r, double theta) {
        long double total = 0.0L;
        for (int two_j = 1; two_j <= two_j_max_; two_j += 2) {
            for (int two_mj = -two_j; two_mj <= two_j; two_mj += 2) {
                for (int kappa : {-(two_j + 1) / 2, (two_j + 1) / 2}) {
                    for (int i = 1; i <= i_max_; ++i) {
                        for (int esign : {-1, 1}) {
                            const auto& lv = level(two_j, two_mj, kappa, esign, i);
                            const Mode k{esign, two_j, two_mj, kappa, lv.first, ph_.mass};
                            const double et = energy(k) - ph_.omega * 0.5 * two_mj;
                            const double w =
                                esign > 0 ? -(fermi(ph_.beta * (et - ph_.mu)) +
                                              fermi(ph_.beta * (et + ph_.mu)))
                                          : 0.0;
                            total -= static_cast<long double>(lv.second * lv.second * w *
                                                              scalar_density(k, r, theta));
                        }
                    }
                }
            }
        }
        return static_cast<double>(total);
    }

private:
    // (p, C) for one mode, memoized.
    const std::pair<double, double>& level(int two_j, int two_mj, int kappa, int esign, int i) {
        const int sign_mk = (two_mj > 0) == (kappa > 0) ? 1 : -1;
        const auto key = ph_.mit ? std::make_tuple(two_j, 0, kappa, esign, i)
                                 : std::make_tuple(two_j, sign_mk, kappa, esign, i);
        auto it = levels_.find(key);
        if (it != levels_.end()) {
            return it->second;
        }
        double p = 0.0;
        if (ph_.mit) {
            const auto roots = mit_cache(two_j, kappa, esign);
            p = roots[i - 1];
        } else {
            const int order = sign_mk > 0 ? (two_j + 1) / 2 : (two_j - 1) / 2;
            p = zero_cache(order)[i - 1] / ph_.radius;
        }
        const Mode k{esign, two_j, two_mj, kappa, p, ph_.mass};
        return levels_[key] = {p, quadrature_norm(k, ph_.radius)};
    }

    const std::vector<double>& zero_cache(int order) {
        auto it = zeros_.find(order);
        if (it == zeros_.end()) {
            it = zeros_.emplace(order, bessel_zeros(order, i_max_)).first;
        }
        return it->second;
    }

    const std::vector<double>& mit_cache(int two_j, int kappa, int esign) {
        const auto key = std::make_tuple(two_j, kappa, esign);
        auto it = mit_.find(key);
        if (it == mit_.end()) {
            it = mit_.emplace(key, mit_roots(two_j, kappa, esign, ph_.radius, ph_.mass,
                                             ph_.varsigma, i_max_))
                     .first;
        }
        return it->second;
    }

    Physics ph_;
    int two_j_max_;
    int i_max_;
    std::map<std::tuple<int, int, int, int, int>, std::pair<double, double>> levels_;
    std::map<int, std::vector<double>> zeros_;
    std::map<std::tuple<int, int, int>, std::vector<double>> mit_;
};

} // namespace oracle
