#include "rotdirac/boundary.hpp"

#include "rotdirac/errors.hpp"
#include "rotdirac/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <string>

namespace rotdirac {
namespace {

constexpr int kExtraIntervals = 16;

int sign_of(int v) { return v > 0 ? 1 : -1; }

void check_two_j(int two_j) {
    if (two_j < 1 || two_j % 2 == 0) {
        throw DomainError("2j must be a positive odd integer, got " + std::to_string(two_j));
    }
}

void check_radius(double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw DomainError("radius must be finite and > 0");
    }
}

specfun::Limits interval_limits(int count) {
    specfun::Limits limits;
    limits.max_index = std::max(limits.max_index, count + kExtraIntervals + 8);
    return limits;
}

// The MIT condition written as a function of x = pR.
struct MitCondition {
    int n = 0;  // j - 1/2
    int kappa = 1;
    int esign = 1;
    double radius = 1.0;
    double mass = 0.0;
    int sign = 1;  // sgn(kappa) * varsigma

    double momentum(double x) const { return x / radius; }

    double energy_plus_mass(double x) const {
        return esign * std::hypot(momentum(x), mass) + mass;
    }

    // (E+M) j_l(x) - sign p j_lbar(x): continuous, no poles.
    double product(double x) const {
        const auto [jn, jn1] = specfun::spherical_bessel_pair(n, x);
        const double jl = kappa > 0 ? jn : jn1;
        const double jlbar = kappa > 0 ? jn1 : jn;
        return energy_plus_mass(x) * jl - sign * momentum(x) * jlbar;
    }

    // product / j_lbar on (0, first zero of j_lbar), where j_lbar > 0. Stays
    // representable for x << n, where the Bessel functions themselves underflow.
    double quotient(double x) const {
        const double q = specfun::spherical_bessel_quotient(n, x);  // j_n / j_{n+1}
        const double ratio = kappa > 0 ? q : 1.0 / q;
        return energy_plus_mass(x) * ratio - sign * momentum(x);
    }
};

template <class F>
double bisect(const F& g, double lo, double hi, double glo) {
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double gmid = g(mid);
        if (gmid == 0.0) {
            return mid;
        }
        if (std::signbit(gmid) == std::signbit(glo)) {
            lo = mid;
            glo = gmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Minimizes s*g over [a, b] by golden section; returns (x, g(x)).
template <class F>
std::pair<double, double> golden_min(const F& g, double a, double b, double s) {
    const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - ratio * (b - a);
    double d = a + ratio * (b - a);
    double gc = s * g(c);
    double gd = s * g(d);
    for (int iter = 0; iter < 80; ++iter) {
        if (gc < gd) {
            b = d;
            d = c;
            gd = gc;
            c = b - ratio * (b - a);
            gc = s * g(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + ratio * (b - a);
            gd = s * g(d);
        }
    }
    const double x = gc < gd ? c : d;
    return {x, g(x)};
}

// Sign scan over the sample points, bisection on each sign change, and a
// golden-section probe wherever |g| dips between three same-sign samples
// (a pair of nearly tangent roots the scan would otherwise step over).
template <class F>
void scan(const F& g, const std::vector<double>& xs, std::vector<double>& roots) {
    std::vector<double> gs(xs.size());
    for (std::size_t t = 0; t < xs.size(); ++t) {
        gs[t] = g(xs[t]);
    }
    for (std::size_t t = 0; t + 1 < xs.size(); ++t) {
        if (gs[t] == 0.0) {
            roots.push_back(xs[t]);
            continue;
        }
        if (std::signbit(gs[t]) != std::signbit(gs[t + 1]) && gs[t + 1] != 0.0) {
            roots.push_back(bisect(g, xs[t], xs[t + 1], gs[t]));
        }
    }
    for (std::size_t t = 1; t + 1 < xs.size(); ++t) {
        const bool same = std::signbit(gs[t - 1]) == std::signbit(gs[t]) &&
                          std::signbit(gs[t]) == std::signbit(gs[t + 1]) && gs[t] != 0.0;
        if (!same || !(std::abs(gs[t]) < std::abs(gs[t - 1])) ||
            !(std::abs(gs[t]) <= std::abs(gs[t + 1]))) {
            continue;
        }
        const double s = gs[t] > 0.0 ? 1.0 : -1.0;
        const auto [xm, gm] = golden_min(g, xs[t - 1], xs[t + 1], s);
        if (s * gm < 0.0) {
            roots.push_back(bisect(g, xs[t - 1], xm, gs[t - 1]));
            roots.push_back(bisect(g, xm, xs[t + 1], gm));
        }
    }
}

} // namespace

double spectral_momentum(int two_j, int sign_mk, int i, double radius) {
    check_two_j(two_j);
    check_radius(radius);
    if (sign_mk != 1 && sign_mk != -1) {
        throw DomainError("sign(m kappa) must be +1 or -1");
    }
    const int order = sign_mk > 0 ? (two_j + 1) / 2 : (two_j - 1) / 2;
    return specfun::spherical_bessel_zero(order, i) / radius;
}

std::vector<double> mit_momenta(int two_j, int kappa, int esign, double radius, double mass,
                                int varsigma, int count) {
    check_two_j(two_j);
    check_radius(radius);
    if (std::abs(kappa) != (two_j + 1) / 2) {
        throw DomainError("kappa must equal +-(j + 1/2)");
    }
    if (esign != 1 && esign != -1) {
        throw DomainError("energy sign must be +1 or -1");
    }
    if (varsigma != 1 && varsigma != -1) {
        throw DomainError("varsigma must be +1 or -1");
    }
    if (!(mass >= 0.0) || !std::isfinite(mass)) {
        throw DomainError("mass must be finite and >= 0");
    }
    if (count < 1) {
        throw DomainError("root count must be >= 1");
    }

    const MitCondition cond{(two_j - 1) / 2, kappa, esign, radius, mass, sign_of(kappa) * varsigma};
    const int pole_order = lower_order(kappa);
    const specfun::Limits limits = interval_limits(count);
    constexpr double kMaxStep = std::numbers::pi / 8.0;

    std::vector<double> roots;
    double left = 0.0;
    for (int k = 1; k <= count + kExtraIntervals; ++k) {
        const double right = specfun::spherical_bessel_zero(pole_order, k, limits);
        std::vector<double> xs;
        std::vector<double> found;
        if (k == 1) {
            constexpr int kFirstSamples = 64;
            xs.push_back(right * 1e-4);
            for (int t = 1; t < kFirstSamples; ++t) {
                xs.push_back(right * t / kFirstSamples);
            }
            xs.push_back(right * (1.0 - 1e-7));
            scan([&](double x) { return cond.quotient(x); }, xs, found);
        } else {
            const int samples =
                std::max(8, static_cast<int>(std::ceil((right - left) / kMaxStep)));
            for (int t = 0; t <= samples; ++t) {
                xs.push_back(left + (right - left) * t / samples);
            }
            scan([&](double x) { return cond.product(x); }, xs, found);
        }
        std::sort(found.begin(), found.end());
        roots.insert(roots.end(), found.begin(), found.end());
        if (static_cast<int>(roots.size()) >= count) {
            break;
        }
        left = right;
    }
    if (static_cast<int>(roots.size()) < count) {
        throw SolverFailure("MIT condition (2j=" + std::to_string(two_j) +
                            ", kappa=" + std::to_string(kappa) + ", esign=" +
                            std::to_string(esign) + "): found only " +
                            std::to_string(roots.size()) + " of " + std::to_string(count) +
                            " roots");
    }
    roots.resize(count);
    for (double& x : roots) {
        x /= radius;
    }
    return roots;
}

double mit_condition(int two_j, int kappa, int esign, double radius, double mass, int varsigma,
                     double p) {
    const MitCondition cond{(two_j - 1) / 2, kappa, esign, radius, mass, sign_of(kappa) * varsigma};
    const double x = p * radius;
    return cond.product(x) / std::max(std::abs(cond.energy_plus_mass(x)), p);
}

double radial_integral_plus(int n, double p, double radius) {
    const double x = p * radius;
    const auto [jn, jn1] = specfun::spherical_bessel_pair(n, x);
    return 0.5 * radius * radius * radius * (jn1 * jn1 - 2.0 * (n + 1) / x * jn * jn1 + jn * jn);
}

double radial_integral_minus(int n, double p, double radius) {
    const auto [jn, jn1] = specfun::spherical_bessel_pair(n, p * radius);
    return radius * radius / (2.0 * p) * jn * jn1;
}

double spectral_norm(int two_j, int sign_mk, int i, double radius) {
    const double xi = spectral_momentum(two_j, sign_mk, i, 1.0);
    const int other = sign_mk > 0 ? (two_j - 1) / 2 : (two_j + 1) / 2;
    const double jval = specfun::spherical_bessel_j(other, xi);
    return std::sqrt(2.0) / (std::sqrt(radius * radius * radius) * std::abs(jval));
}

double mit_norm(int two_j, int kappa, int i, double radius, double mass, int esign, int varsigma,
                double p) {
    check_two_j(two_j);
    const double x = p * radius;
    const double e = mode_energy(esign, p, mass);
    const double twoj1 = two_j + 1.0;
    const auto [jn, jn1] = specfun::spherical_bessel_pair((two_j - 1) / 2, x);
    const double jval = kappa > 0 ? jn1 : jn;
    const double chiral = kappa > 0 ? -varsigma * twoj1 : varsigma * twoj1;
    const double denom = 2.0 * e * radius + chiral + varsigma * mass / e;
    const double ratio = (e + mass) / denom;
    if (!(ratio > 0.0) || !std::isfinite(ratio)) {
        throw SolverFailure("MIT normalization for (2j=" + std::to_string(two_j) +
                            ", kappa=" + std::to_string(kappa) + ", i=" + std::to_string(i) +
                            ", esign=" + std::to_string(esign) +
                            ") is not positive; p is not a root of the matching condition");
    }
    return std::sqrt(2.0) / (radius * std::abs(jval)) * std::sqrt(ratio);
}

LevelTable LevelTable::build(const BoundaryKind& bc, const PhysicalParams& params, int two_j_max,
                             int i_max, bool parallel) {
    bc.validate();
    params.validate();
    check_two_j(two_j_max);
    if (i_max < 1) {
        throw DomainError("i_max must be >= 1");
    }

    LevelTable table;
    table.bc_ = bc;
    table.two_j_max_ = two_j_max;
    table.i_max_ = i_max;
    table.m_slots_ = bc.is_mit() ? 1 : 2;

    const int n_j = (two_j_max + 1) / 2;
    const int groups = n_j * 4;
    table.levels_.resize(static_cast<std::size_t>(groups) * table.m_slots_ * i_max);

    // Fill the zero cache up front so the parallel phase only reads it.
    const int top_order = (two_j_max + 1) / 2;
    if (bc.is_mit()) {
        specfun::bessel_zero_table(top_order, i_max + kExtraIntervals,
                                   interval_limits(i_max));
    } else {
        specfun::bessel_zero_table(top_order, i_max);
    }

    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int g = 0; g < groups; ++g) {
        try {
            const int two_j = 2 * (g / 4) + 1;
            const int kappa = ((g / 2) % 2 == 1 ? 1 : -1) * (two_j + 1) / 2;
            const int esign = g % 2 == 1 ? 1 : -1;
            if (bc.is_mit()) {
                const auto ps = mit_momenta(two_j, kappa, esign, params.radius, params.mass,
                                            bc.varsigma, i_max);
                for (int i = 1; i <= i_max; ++i) {
                    const double p = ps[i - 1];
                    table.levels_[table.index(two_j, kappa, esign, i, 1)] = {
                        p, mode_energy(esign, p, params.mass),
                        mit_norm(two_j, kappa, i, params.radius, params.mass, esign,
                                 bc.varsigma, p)};
                }
            } else {
                for (int m_sign : {-1, 1}) {
                    const int sign_mk = m_sign * sign_of(kappa);
                    for (int i = 1; i <= i_max; ++i) {
                        const double p = spectral_momentum(two_j, sign_mk, i, params.radius);
                        table.levels_[table.index(two_j, kappa, esign, i, m_sign)] = {
                            p, mode_energy(esign, p, params.mass),
                            spectral_norm(two_j, sign_mk, i, params.radius)};
                    }
                }
            }
        } catch (...) {
#pragma omp critical(rotdirac_level_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return table;
}

std::size_t LevelTable::index(int two_j, int kappa, int esign, int i, int m_sign) const {
    const std::size_t jj = (two_j - 1) / 2;
    const std::size_t kk = kappa > 0 ? 1 : 0;
    const std::size_t ee = esign > 0 ? 1 : 0;
    const std::size_t ms = m_slots_ == 2 && m_sign > 0 ? 1 : 0;
    return (((jj * 2 + kk) * 2 + ee) * m_slots_ + ms) * i_max_ + (i - 1);
}

const RadialLevel& LevelTable::level(int two_j, int kappa, int esign, int i, int m_sign) const {
    if (two_j < 1 || two_j > two_j_max_ || two_j % 2 == 0 || i < 1 || i > i_max_ ||
        std::abs(kappa) != (two_j + 1) / 2) {
        throw DomainError("level outside the tabulated truncation");
    }
    return levels_[index(two_j, kappa, esign, i, m_sign)];
}

QuantizedMode LevelTable::mode(const QuantumNumbers& qn, double omega) const {
    qn.validate();
    const RadialLevel& lv = level(qn.two_j, qn.kappa, qn.esign, qn.i, qn.two_mj > 0 ? 1 : -1);
    return {qn, lv.p, lv.energy, corotating_energy(lv.energy, qn.mj(), omega), lv.norm};
}

std::vector<QuantizedMode> LevelTable::expand(double omega) const {
    std::vector<QuantizedMode> modes;
    for (int two_j = 1; two_j <= two_j_max_; two_j += 2) {
        const int kmag = (two_j + 1) / 2;
        for (int kappa : {-kmag, kmag}) {
            for (int i = 1; i <= i_max_; ++i) {
                for (int two_mj = -two_j; two_mj <= two_j; two_mj += 2) {
                    for (int esign : {-1, 1}) {
                        modes.push_back(mode({esign, two_j, two_mj, kappa, i}, omega));
                    }
                }
            }
        }
    }
    return modes;
}

std::vector<QuantizedMode> enumerate_spectrum(const BoundaryKind& bc,
                                              const PhysicalParams& params, int two_j_max,
                                              int i_max, bool parallel) {
    return LevelTable::build(bc, params, two_j_max, i_max, parallel).expand(params.omega);
}

VacuumReport verify_vacuum_equivalence(std::span<const QuantizedMode> modes, double omega,
                                       double radius) {
    VacuumReport report;
    report.omega_r = omega * radius;
    report.min_abs_energy_tilde = std::numeric_limits<double>::infinity();
    for (const QuantizedMode& m : modes) {
        QuantizedMode checked = m;
        checked.energy_tilde = corotating_energy(m.energy, m.qn.mj(), omega);
        report.min_abs_energy_tilde =
            std::min(report.min_abs_energy_tilde, std::abs(checked.energy_tilde));
        if (checked.energy * checked.energy_tilde <= 0.0) {
            report.violations.push_back(checked);
        }
        ++report.checked;
    }
    return report;
}

} // namespace rotdirac
