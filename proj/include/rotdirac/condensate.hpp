#pragma once

// Thermal expectation value of the scalar condensate inside the rotating
// sphere, as a truncated sum over quantized modes:
//
//   <:psibar psi:> = - sum_k |C_k|^2 w'(E~_k) (A_k + B_k),
//
// with only E > 0 modes weighted. Negative-m_j modes are folded onto positive
// m_j through E-bar = E + Omega m_j.

#include "rotdirac/boundary.hpp"
#include "rotdirac/params.hpp"

#include <vector>

namespace rotdirac {

/// w = theta(E)/2 [tanh(beta(E~-mu)/2) + tanh(beta(E~+mu)/2)].
double thermal_weight(double energy_tilde, int esign, double beta, double mu);

/// w' = w - theta(E) = -theta(E) [n(E~-mu) + n(E~+mu)], n(x) = 1/(1+e^{beta x}).
double thermal_weight_subtracted(double energy_tilde, int esign, double beta, double mu);

struct Truncation {
    int two_j_max = 41;  ///< 2 j_max
    int i_max = 60;

    friend bool operator==(const Truncation&, const Truncation&) = default;
};

/// Vacuum is the temperature-independent subtraction (w'); Raw sums w itself
/// and diverges as the truncation grows.
enum class Subtraction { Vacuum, Raw };

struct CondensateOptions {
    Subtraction subtraction = Subtraction::Vacuum;
    bool parallel = true;
};

/// Holds the radial levels for one (bc, params, truncation) and evaluates the
/// condensate at arbitrary points.
class CondensateEvaluator {
public:
    /// Throws FasterThanLightBoundary when Omega R >= 1 and DomainError when
    /// the truncation is below j_max = 3/2.
    CondensateEvaluator(const BoundaryKind& bc, const PhysicalParams& params,
                        Truncation truncation = {}, CondensateOptions options = {});

    /// Contribution of each j shell, index s <-> j = s + 1/2, in canonical order.
    std::vector<double> shells(double r, double theta) const;

    /// Sum of shells(r, theta), accumulated in ascending j.
    double value(double r, double theta) const;

    const LevelTable& levels() const { return levels_; }
    const PhysicalParams& params() const { return params_; }
    const Truncation& truncation() const { return truncation_; }

private:
    double shell(int two_j, double r, double theta) const;
    double weight(double energy_tilde) const;
    void check_point(double r, double theta) const;

    BoundaryKind bc_;
    PhysicalParams params_;
    Truncation truncation_;
    CondensateOptions options_;
    LevelTable levels_;
};

double condensate_point(const BoundaryKind& bc, const PhysicalParams& params, double r,
                        double theta, Truncation truncation = {}, CondensateOptions options = {});

/// Omega = 0 value from the addition-theorem closed forms; theta independent.
/// Throws DomainError when params.omega != 0.
double condensate_nonrotating(const BoundaryKind& bc, const PhysicalParams& params, double r,
                              Truncation truncation = {}, CondensateOptions options = {});

struct CondensateGrid {
    std::vector<double> r_values;
    std::vector<double> theta_values;
    std::vector<std::vector<double>> values;  ///< values[t][k] at (r_values[k], theta_values[t])
    Truncation truncation;
    double tail_estimate = 0.0;  ///< max over points of |last j shell|
};

/// Grid of condensate values, OpenMP-parallel over points.
CondensateGrid condensate_grid(const BoundaryKind& bc, const PhysicalParams& params,
                               const std::vector<double>& r_values,
                               const std::vector<double>& theta_values,
                               Truncation truncation = {}, CondensateOptions options = {});

/// Plain loop over the same points; the reference for the parallel version.
CondensateGrid condensate_grid_serial(const BoundaryKind& bc, const PhysicalParams& params,
                                      const std::vector<double>& r_values,
                                      const std::vector<double>& theta_values,
                                      Truncation truncation = {},
                                      Subtraction subtraction = Subtraction::Vacuum);

} // namespace rotdirac
