#pragma once

// Single-mode quantities of the free Dirac field in spherical coordinates.
//
// Half-integers (j, m_j) are stored doubled so that quantum numbers compare
// exactly. A mode is labelled by (esign, j, m_j, kappa, i) with
// kappa = +-(j + 1/2); the upper spinor carries j_{l_kappa}(pr) and the lower
// spinor j_{lbar_kappa}(pr), where
//   l_kappa    = kappa - 1 (kappa > 0),  -kappa     (kappa < 0)
//   lbar_kappa = kappa     (kappa > 0),  -kappa - 1 (kappa < 0).

#include <array>
#include <complex>
#include <compare>

namespace rotdirac {

struct QuantumNumbers {
    int esign = 1;   ///< sign of the Minkowski energy, +1 or -1
    int two_j = 1;   ///< 2j, odd and positive
    int two_mj = 1;  ///< 2m_j, odd, |two_mj| <= two_j
    int kappa = 1;   ///< +-(j + 1/2), never zero
    int i = 1;       ///< radial index, >= 1

    double j() const { return 0.5 * two_j; }
    double mj() const { return 0.5 * two_mj; }

    /// Throws DomainError unless every field is consistent.
    void validate() const;

    friend auto operator<=>(const QuantumNumbers&, const QuantumNumbers&) = default;
};

/// Order of the Bessel function in the upper spinor.
int upper_order(int kappa);
/// Order of the Bessel function in the lower spinor.
int lower_order(int kappa);

/// E~ = E - Omega m_j.
double corotating_energy(double energy, double mj, double omega);

/// chi^+ and chi^- densities at polar angle theta; both independent of phi.
struct AngularDensity {
    double d_plus = 0.0;
    double d_minus = 0.0;
};

AngularDensity angular_density(int two_j, int two_mj, int kappa, double theta);

/// Radial amplitudes of the (unnormalized) mode: upper = f, lower = i * g_over_i.
struct RadialPair {
    double f = 0.0;
    double g_over_i = 0.0;
};

/// E = esign * sqrt(p^2 + M^2) for a mode of momentum p.
double mode_energy(int esign, double p, double mass);

RadialPair radial_pair(const QuantumNumbers& k, double p, double mass, double r);

/// Decomposition of the scalar density Ubar U = A + B (before |C|^2):
/// A is mass independent, B is proportional to M/E.
struct DensityTerms {
    double a = 0.0;
    double b = 0.0;
    double total() const { return a + b; }
};

DensityTerms density_terms(const QuantumNumbers& k, double p, double mass, double r,
                           double theta);

/// Charge-conjugate label (-E, j, -m_j, -kappa, i).
QuantumNumbers conjugate_index(const QuantumNumbers& k);

// ---------------------------------------------------------------------------
// Explicit four-spinor assembly. Not used by the mode sums; it backs the
// boundary-condition checks and serves as an independent route in tests.

using Spinor = std::array<std::complex<double>, 4>;

/// Two-component spinor spherical harmonics chi^+_{j m_j} (l = j - 1/2) and
/// chi^-_{j m_j} (l = j + 1/2), Dirac representation conventions.
std::array<std::complex<double>, 2> spinor_harmonic_plus(int two_j, int two_mj, double theta,
                                                         double phi);
std::array<std::complex<double>, 2> spinor_harmonic_minus(int two_j, int two_mj,
                                                          double theta, double phi);

/// u_k(r, theta, phi) without normalization constant.
Spinor assemble_spinor(const QuantumNumbers& k, double p, double mass, double r, double theta,
                       double phi);

/// -i gamma^r psi with gamma^r = gamma^1 sin(t)cos(p) + gamma^2 sin(t)sin(p) + gamma^3 cos(t).
Spinor minus_i_gamma_r(const Spinor& psi, double theta, double phi);

/// psi-bar psi = |psi_1|^2 + |psi_2|^2 - |psi_3|^2 - |psi_4|^2.
double scalar_bilinear(const Spinor& psi);

/// psi^dagger psi.
double probability_density(const Spinor& psi);

} // namespace rotdirac
