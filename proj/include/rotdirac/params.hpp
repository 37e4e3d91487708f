#pragma once

#include <string>

namespace rotdirac {

enum class BoundaryType { Spectral, Mit };

/// Boundary condition at r = R. varsigma is +1 (ordinary MIT) or -1 (chiral
/// MIT) and is 0 for the spectral condition.
struct BoundaryKind {
    BoundaryType type = BoundaryType::Spectral;
    int varsigma = 0;

    static BoundaryKind spectral() { return {BoundaryType::Spectral, 0}; }
    static BoundaryKind mit(int varsigma = 1) { return {BoundaryType::Mit, varsigma}; }

    bool is_mit() const { return type == BoundaryType::Mit; }
    void validate() const;
    std::string name() const;

    friend bool operator==(const BoundaryKind&, const BoundaryKind&) = default;
};

/// Natural units (hbar = c = k_B = 1).
struct PhysicalParams {
    double mass = 1.0;    ///< M >= 0
    double radius = 1.0;  ///< R > 0
    double omega = 0.0;   ///< Omega >= 0 with Omega R < 1
    double beta = 1.0;    ///< inverse temperature > 0
    double mu = 0.0;      ///< chemical potential

    /// Throws DomainError, or FasterThanLightBoundary when Omega R >= 1.
    void validate() const;

    friend bool operator==(const PhysicalParams&, const PhysicalParams&) = default;
};

/// Throws FasterThanLightBoundary unless omega * radius < 1.
void require_subluminal(double omega, double radius);

} // namespace rotdirac
