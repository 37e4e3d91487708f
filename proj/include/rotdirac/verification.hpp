#pragma once

// Numerical checks on individual quantized modes: norms and overlaps by
// quadrature, and residuals of the boundary conditions at r = R. These work on
// the explicitly assembled four-spinor, independently of the closed forms used
// by the mode sums.

#include "rotdirac/boundary.hpp"

#include <complex>
#include <span>
#include <vector>

namespace rotdirac {

struct QuadratureSize {
    int radial = 200;
    int angular = 100;
};

/// integral over the ball of psi^dagger psi for the mode C u_k.
double mode_norm_quadrature(const QuantizedMode& mode, double mass, double radius,
                            QuadratureSize size = {});

/// <C_a u_a, C_b u_b> over the ball. Zero without integration when m_j differs
/// (the azimuthal integral vanishes).
std::complex<double> mode_overlap_quadrature(const QuantizedMode& a, const QuantizedMode& b,
                                             double mass, double radius,
                                             QuadratureSize size = {});

/// Largest |component| among the pair that must vanish at r = R under the
/// spectral condition: the lower pair for m_j > 0, the upper pair for m_j < 0.
double spectral_boundary_residual(const QuantizedMode& mode, double mass, double radius,
                                  std::span<const double> thetas);

/// Largest componentwise |(-i gamma^r - varsigma) C u_k| at r = R over the
/// sampled directions.
double mit_boundary_residual(const QuantizedMode& mode, double mass, double radius,
                             int varsigma, std::span<const double> thetas,
                             std::span<const double> phis);

/// |C|^2 (A + B) at r = R.
double boundary_scalar_density(const QuantizedMode& mode, double mass, double radius,
                               double theta);

struct BoundaryReport {
    double worst_spectral = 0.0;       ///< max spectral_boundary_residual
    double worst_mit_relation = 0.0;   ///< max mit_boundary_residual
    double worst_mit_density = 0.0;    ///< max |boundary_scalar_density|
    double worst_quantization = 0.0;   ///< max |mit_condition| (MIT only)
    std::size_t checked = 0;

    bool ok(double spectral_tol = 1e-10, double mit_tol = 1e-9) const {
        return worst_spectral <= spectral_tol && worst_mit_relation <= mit_tol &&
               worst_mit_density <= mit_tol && worst_quantization <= spectral_tol;
    }
};

/// Runs the residual checks relevant to `bc` over every mode in `modes`.
BoundaryReport check_boundary(const BoundaryKind& bc, std::span<const QuantizedMode> modes,
                              double mass, double radius, std::span<const double> thetas,
                              std::span<const double> phis);

} // namespace rotdirac
