#include "rotdirac/modes.hpp"

#include "rotdirac/errors.hpp"
#include "rotdirac/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rotdirac {
namespace {

void check_angular_labels(int two_j, int two_mj) {
    if (two_j < 1 || two_j % 2 == 0) {
        throw DomainError("2j must be a positive odd integer, got " + std::to_string(two_j));
    }
    if (two_mj % 2 == 0 || std::abs(two_mj) > two_j) {
        throw DomainError("2m_j must be odd with |m_j| <= j, got 2m_j=" + std::to_string(two_mj));
    }
}

void check_kappa(int two_j, int kappa) {
    if (std::abs(kappa) != (two_j + 1) / 2) {
        throw DomainError("kappa must equal +-(j + 1/2), got " + std::to_string(kappa));
    }
}

double ylm_density_or_zero(int l, int m, double theta) {
    if (std::abs(m) > l) {
        return 0.0;
    }
    return specfun::assoc_legendre_density(l, m, theta);
}

std::complex<double> ylm_or_zero(int l, int m, double theta, double phi) {
    if (std::abs(m) > l) {
        return {0.0, 0.0};
    }
    return specfun::spherical_harmonic(l, m, theta, phi);
}

int sign_of(int v) { return v > 0 ? 1 : -1; }

} // namespace

void QuantumNumbers::validate() const {
    if (esign != 1 && esign != -1) {
        throw DomainError("energy sign must be +1 or -1");
    }
    check_angular_labels(two_j, two_mj);
    check_kappa(two_j, kappa);
    if (i < 1) {
        throw DomainError("radial index must be >= 1");
    }
}

int upper_order(int kappa) { return kappa > 0 ? kappa - 1 : -kappa; }

int lower_order(int kappa) { return kappa > 0 ? kappa : -kappa - 1; }

double corotating_energy(double energy, double mj, double omega) { return energy - omega * mj; }

AngularDensity angular_density(int two_j, int two_mj, int kappa, double theta) {
    check_angular_labels(two_j, two_mj);
    check_kappa(two_j, kappa);
    const int l_plus = (two_j - 1) / 2;
    const int l_minus = (two_j + 1) / 2;
    const int q_down = (two_mj - 1) / 2;
    const int q_up = (two_mj + 1) / 2;

    AngularDensity d;
    d.d_plus = (two_j + two_mj) / (2.0 * two_j) * ylm_density_or_zero(l_plus, q_down, theta) +
               (two_j - two_mj) / (2.0 * two_j) * ylm_density_or_zero(l_plus, q_up, theta);
    d.d_minus =
        (two_j - two_mj + 2) / (2.0 * (two_j + 2)) * ylm_density_or_zero(l_minus, q_down, theta) +
        (two_j + two_mj + 2) / (2.0 * (two_j + 2)) * ylm_density_or_zero(l_minus, q_up, theta);
    return d;
}

double mode_energy(int esign, double p, double mass) { return esign * std::hypot(p, mass); }

RadialPair radial_pair(const QuantumNumbers& k, double p, double mass, double r) {
    k.validate();
    if (!(p > 0.0)) {
        throw DomainError("radial_pair needs p > 0");
    }
    const double e = mode_energy(k.esign, p, mass);
    const auto [jn, jn1] = specfun::spherical_bessel_pair((k.two_j - 1) / 2, p * r);
    const double upper_bessel = k.kappa > 0 ? jn : jn1;
    const double lower_bessel = k.kappa > 0 ? jn1 : jn;
    const double up = std::sqrt(std::max(0.0, (e + mass) / (2.0 * e)));
    const double down = std::sqrt(std::max(0.0, (e - mass) / (2.0 * e)));
    return {up * upper_bessel, k.esign * sign_of(k.kappa) * down * lower_bessel};
}

DensityTerms density_terms(const QuantumNumbers& k, double p, double mass, double r,
                           double theta) {
    k.validate();
    const double e = mode_energy(k.esign, p, mass);
    const auto [jn, jn1] = specfun::spherical_bessel_pair((k.two_j - 1) / 2, p * r);
    const AngularDensity d = angular_density(k.two_j, k.two_mj, k.kappa, theta);
    const double plus = jn * jn * d.d_plus;
    const double minus = jn1 * jn1 * d.d_minus;
    return {sign_of(k.kappa) * 0.5 * (plus - minus), mass / (2.0 * e) * (plus + minus)};
}

QuantumNumbers conjugate_index(const QuantumNumbers& k) {
    return {-k.esign, k.two_j, -k.two_mj, -k.kappa, k.i};
}

std::array<std::complex<double>, 2> spinor_harmonic_plus(int two_j, int two_mj, double theta,
                                                         double phi) {
    check_angular_labels(two_j, two_mj);
    const int l = (two_j - 1) / 2;
    const double c1 = std::sqrt((two_j + two_mj) / (2.0 * two_j));
    const double c2 = std::sqrt((two_j - two_mj) / (2.0 * two_j));
    return {c1 * ylm_or_zero(l, (two_mj - 1) / 2, theta, phi),
            c2 * ylm_or_zero(l, (two_mj + 1) / 2, theta, phi)};
}

std::array<std::complex<double>, 2> spinor_harmonic_minus(int two_j, int two_mj,
                                                          double theta, double phi) {
    check_angular_labels(two_j, two_mj);
    const int l = (two_j + 1) / 2;
    const double c1 = std::sqrt((two_j - two_mj + 2) / (2.0 * (two_j + 2)));
    const double c2 = std::sqrt((two_j + two_mj + 2) / (2.0 * (two_j + 2)));
    return {c1 * ylm_or_zero(l, (two_mj - 1) / 2, theta, phi),
            -c2 * ylm_or_zero(l, (two_mj + 1) / 2, theta, phi)};
}

Spinor assemble_spinor(const QuantumNumbers& k, double p, double mass, double r, double theta,
                       double phi) {
    const RadialPair rp = radial_pair(k, p, mass, r);
    const auto plus = spinor_harmonic_plus(k.two_j, k.two_mj, theta, phi);
    const auto minus = spinor_harmonic_minus(k.two_j, k.two_mj, theta, phi);
    const auto& upper = k.kappa > 0 ? plus : minus;
    const auto& lower = k.kappa > 0 ? minus : plus;
    const std::complex<double> g(0.0, rp.g_over_i);
    return {rp.f * upper[0], rp.f * upper[1], g * lower[0], g * lower[1]};
}

Spinor minus_i_gamma_r(const Spinor& psi, double theta, double phi) {
    using cd = std::complex<double>;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const cd off_lo = s * std::polar(1.0, phi);   // (sigma_r)_{21}
    const cd off_hi = s * std::polar(1.0, -phi);  // (sigma_r)_{12}
    auto sigma_r = [&](cd a, cd b) -> std::array<cd, 2> {
        return {c * a + off_hi * b, off_lo * a - c * b};
    };
    const auto lo = sigma_r(psi[2], psi[3]);
    const auto up = sigma_r(psi[0], psi[1]);
    const cd mi(0.0, -1.0);
    const cd pi(0.0, 1.0);
    return {mi * lo[0], mi * lo[1], pi * up[0], pi * up[1]};
}

double scalar_bilinear(const Spinor& psi) {
    return std::norm(psi[0]) + std::norm(psi[1]) - std::norm(psi[2]) - std::norm(psi[3]);
}

double probability_density(const Spinor& psi) {
    return std::norm(psi[0]) + std::norm(psi[1]) + std::norm(psi[2]) + std::norm(psi[3]);
}

} // namespace rotdirac
