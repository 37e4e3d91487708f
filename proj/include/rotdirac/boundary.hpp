#pragma once

// Quantization of the Dirac field inside a sphere of radius R.
//
// Spectral condition: the lower spinor pair vanishes at r = R for m_j > 0 and
// the upper pair for m_j < 0, so pR is a zero of j_{j+1/2} (m kappa > 0) or
// j_{j-1/2} (m kappa < 0).
//
// MIT condition -i gamma^r psi = varsigma psi at r = R gives
//   j_{l_kappa}(pR) = sgn(kappa) varsigma p / (E + M) j_{lbar_kappa}(pR).

#include "rotdirac/modes.hpp"
#include "rotdirac/params.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace rotdirac {

struct QuantizedMode {
    QuantumNumbers qn;
    double p = 0.0;             ///< momentum
    double energy = 0.0;        ///< E = esign sqrt(p^2 + M^2)
    double energy_tilde = 0.0;  ///< E - Omega m_j
    double norm = 0.0;          ///< normalization constant C > 0
};

/// xi / R with xi = xi_{j+1/2,i} when sign_mk > 0 and xi_{j-1/2,i} otherwise.
double spectral_momentum(int two_j, int sign_mk, int i, double radius);

/// First `count` positive roots p of the MIT quantization condition.
/// Throws SolverFailure if the roots cannot all be bracketed.
std::vector<double> mit_momenta(int two_j, int kappa, int esign, double radius, double mass,
                                int varsigma, int count);

/// Scaled residual of the MIT condition at momentum p:
/// [(E+M) j_l(pR) - sgn(kappa) varsigma p j_lbar(pR)] / max(|E+M|, p).
double mit_condition(int two_j, int kappa, int esign, double radius, double mass, int varsigma,
                     double p);

/// int_0^R r^2 (j_n^2(pr) + j_{n+1}^2(pr)) / 2 dr, closed form.
double radial_integral_plus(int n, double p, double radius);
/// int_0^R r^2 (j_n^2(pr) - j_{n+1}^2(pr)) / 2 dr, closed form.
double radial_integral_minus(int n, double p, double radius);

double spectral_norm(int two_j, int sign_mk, int i, double radius);

/// Throws SolverFailure if (p, E) cannot come from the MIT condition, i.e. the
/// quantity under the square root is not positive.
double mit_norm(int two_j, int kappa, int i, double radius, double mass, int esign, int varsigma,
                double p);

/// Momentum, energy and normalization of one radial level.
struct RadialLevel {
    double p = 0.0;
    double energy = 0.0;
    double norm = 0.0;
};

/// Radial levels for every (j, kappa, esign, i) up to a truncation. Spectral
/// levels additionally depend on sign(m_j); MIT levels do not. Levels are
/// shared by all m_j and expanded into modes on demand.
class LevelTable {
public:
    static LevelTable build(const BoundaryKind& bc, const PhysicalParams& params, int two_j_max,
                            int i_max, bool parallel = true);

    const RadialLevel& level(int two_j, int kappa, int esign, int i, int m_sign) const;

    QuantizedMode mode(const QuantumNumbers& qn, double omega) const;

    /// All modes in canonical order: ascending (j, kappa, i, m_j, esign).
    std::vector<QuantizedMode> expand(double omega) const;

    const BoundaryKind& boundary() const { return bc_; }
    int two_j_max() const { return two_j_max_; }
    int i_max() const { return i_max_; }

private:
    std::size_t index(int two_j, int kappa, int esign, int i, int m_sign) const;

    BoundaryKind bc_;
    int two_j_max_ = 1;
    int i_max_ = 1;
    int m_slots_ = 1;
    std::vector<RadialLevel> levels_;
};

/// Every mode with j <= two_j_max / 2 and i <= i_max, both kappa, both energy
/// signs and all m_j. Throws FasterThanLightBoundary when Omega R >= 1.
std::vector<QuantizedMode> enumerate_spectrum(const BoundaryKind& bc,
                                              const PhysicalParams& params, int two_j_max,
                                              int i_max, bool parallel = true);

struct VacuumReport {
    std::vector<QuantizedMode> violations;  ///< modes with E * E~ <= 0
    double min_abs_energy_tilde = 0.0;
    double omega_r = 0.0;
    std::size_t checked = 0;

    bool ok() const { return violations.empty(); }
};

/// Recomputes E~ = E - Omega m_j for each mode and lists those with E E~ <= 0.
/// Does not itself enforce Omega R < 1.
VacuumReport verify_vacuum_equivalence(std::span<const QuantizedMode> modes, double omega,
                                       double radius);

} // namespace rotdirac
