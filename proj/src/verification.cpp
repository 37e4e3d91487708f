#include "rotdirac/verification.hpp"

#include "rotdirac/quadrature.hpp"
#include "rotdirac/summation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rotdirac {
namespace {

Spinor scaled(const Spinor& psi, double c) {
    return {c * psi[0], c * psi[1], c * psi[2], c * psi[3]};
}

std::complex<double> inner(const Spinor& a, const Spinor& b) {
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] + std::conj(a[2]) * b[2] +
           std::conj(a[3]) * b[3];
}

template <class F>
std::complex<double> ball_integral(F integrand, double radius, QuadratureSize size) {
    const GaussLegendre rr = gauss_legendre(size.radial, 0.0, radius);
    const GaussLegendre cc = gauss_legendre(size.angular);
    CompensatedSum re;
    CompensatedSum im;
    for (int a = 0; a < size.radial; ++a) {
        const double r = rr.nodes[a];
        const double wr = rr.weights[a] * r * r;
        for (int b = 0; b < size.angular; ++b) {
            const double theta = std::acos(cc.nodes[b]);
            const std::complex<double> v = wr * cc.weights[b] * integrand(r, theta);
            re += v.real();
            im += v.imag();
        }
    }
    return 2.0 * std::numbers::pi * std::complex<double>(re.value(), im.value());
}

} // namespace

double mode_norm_quadrature(const QuantizedMode& mode, double mass, double radius,
                            QuadratureSize size) {
    const double c2 = mode.norm * mode.norm;
    return ball_integral(
               [&](double r, double theta) {
                   return std::complex<double>(
                       c2 * probability_density(
                                assemble_spinor(mode.qn, mode.p, mass, r, theta, 0.0)));
               },
               radius, size)
        .real();
}

std::complex<double> mode_overlap_quadrature(const QuantizedMode& a, const QuantizedMode& b,
                                             double mass, double radius,
                                             QuadratureSize size) {
    if (a.qn.two_mj != b.qn.two_mj) {
        return {0.0, 0.0};
    }
    const double c = a.norm * b.norm;
    return ball_integral(
        [&](double r, double theta) {
            return c * inner(assemble_spinor(a.qn, a.p, mass, r, theta, 0.0),
                             assemble_spinor(b.qn, b.p, mass, r, theta, 0.0));
        },
        radius, size);
}

double spectral_boundary_residual(const QuantizedMode& mode, double mass, double radius,
                                  std::span<const double> thetas) {
    const int first = mode.qn.two_mj > 0 ? 2 : 0;
    double worst = 0.0;
    for (double theta : thetas) {
        const Spinor psi =
            scaled(assemble_spinor(mode.qn, mode.p, mass, radius, theta, 0.0), mode.norm);
        worst = std::max({worst, std::abs(psi[first]), std::abs(psi[first + 1])});
    }
    return worst;
}

double mit_boundary_residual(const QuantizedMode& mode, double mass, double radius,
                             int varsigma, std::span<const double> thetas,
                             std::span<const double> phis) {
    double worst = 0.0;
    for (double theta : thetas) {
        for (double phi : phis) {
            const Spinor psi =
                scaled(assemble_spinor(mode.qn, mode.p, mass, radius, theta, phi), mode.norm);
            const Spinor lhs = minus_i_gamma_r(psi, theta, phi);
            for (int c = 0; c < 4; ++c) {
                worst = std::max(worst, std::abs(lhs[c] - static_cast<double>(varsigma) * psi[c]));
            }
        }
    }
    return worst;
}

double boundary_scalar_density(const QuantizedMode& mode, double mass, double radius,
                               double theta) {
    return mode.norm * mode.norm * density_terms(mode.qn, mode.p, mass, radius, theta).total();
}

BoundaryReport check_boundary(const BoundaryKind& bc, std::span<const QuantizedMode> modes,
                              double mass, double radius, std::span<const double> thetas,
                              std::span<const double> phis) {
    BoundaryReport report;
    for (const QuantizedMode& m : modes) {
        if (bc.is_mit()) {
            report.worst_mit_relation =
                std::max(report.worst_mit_relation,
                         mit_boundary_residual(m, mass, radius, bc.varsigma, thetas, phis));
            for (double theta : thetas) {
                report.worst_mit_density =
                    std::max(report.worst_mit_density,
                             std::abs(boundary_scalar_density(m, mass, radius, theta)));
            }
            report.worst_quantization =
                std::max(report.worst_quantization,
                         std::abs(mit_condition(m.qn.two_j, m.qn.kappa, m.qn.esign, radius, mass,
                                                bc.varsigma, m.p)));
        } else {
            report.worst_spectral = std::max(report.worst_spectral,
                                             spectral_boundary_residual(m, mass, radius, thetas));
        }
        ++report.checked;
    }
    return report;
}

} // namespace rotdirac
