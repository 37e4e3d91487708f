#include "rotdirac/condensate.hpp"

#include "rotdirac/errors.hpp"
#include "rotdirac/specfun.hpp"
#include "rotdirac/summation.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace rotdirac {
namespace {

// 1 / (1 + e^x) without overflow.
double fermi(double x) {
    if (x > 0.0) {
        const double e = std::exp(-x);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(x));
}

void check_truncation(const Truncation& t) {
    if (t.two_j_max < 3 || t.two_j_max % 2 == 0) {
        throw DomainError("truncation needs j_max >= 3/2 (half-integer), got 2j_max=" +
                          std::to_string(t.two_j_max));
    }
    if (t.i_max < 1) {
        throw DomainError("truncation needs i_max >= 1");
    }
}

} // namespace

double thermal_weight(double energy_tilde, int esign, double beta, double mu) {
    if (esign < 0) {
        return 0.0;
    }
    return 0.5 * (std::tanh(0.5 * beta * (energy_tilde - mu)) +
                  std::tanh(0.5 * beta * (energy_tilde + mu)));
}

double thermal_weight_subtracted(double energy_tilde, int esign, double beta, double mu) {
    if (esign < 0) {
        return 0.0;
    }
    return -(fermi(beta * (energy_tilde - mu)) + fermi(beta * (energy_tilde + mu)));
}

CondensateEvaluator::CondensateEvaluator(const BoundaryKind& bc, const PhysicalParams& params,
                                         Truncation truncation, CondensateOptions options)
    : bc_(bc), params_(params), truncation_(truncation), options_(options) {
    params_.validate();
    check_truncation(truncation_);
    levels_ = LevelTable::build(bc_, params_, truncation_.two_j_max, truncation_.i_max,
                                options_.parallel);
}

double CondensateEvaluator::weight(double energy_tilde) const {
    if (options_.subtraction == Subtraction::Raw) {
        return thermal_weight(energy_tilde, 1, params_.beta, params_.mu);
    }
    return thermal_weight_subtracted(energy_tilde, 1, params_.beta, params_.mu);
}

void CondensateEvaluator::check_point(double r, double theta) const {
    if (!(r >= 0.0 && r <= params_.radius)) {
        throw DomainError("r must lie in [0, R]");
    }
    if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
        throw DomainError("theta must lie in [0, pi]");
    }
}

double CondensateEvaluator::shell(int two_j, double r, double theta) const {
    const int n = (two_j - 1) / 2;
    const int kmag = (two_j + 1) / 2;
    const bool spectral = !bc_.is_mit();

    std::vector<AngularDensity> dens;
    for (int two_mj = 1; two_mj <= two_j; two_mj += 2) {
        dens.push_back(angular_density(two_j, two_mj, kmag, theta));
    }

    CompensatedSum acc;
    for (int kappa : {-kmag, kmag}) {
        const double sk = kappa > 0 ? 1.0 : -1.0;
        for (int i = 1; i <= truncation_.i_max; ++i) {
            const RadialLevel& lv = levels_.level(two_j, kappa, 1, i, 1);
            const double c2 = lv.norm * lv.norm;
            const auto [jn, jn1] = specfun::spherical_bessel_pair(n, lv.p * r);
            const double mass_ratio = params_.mass / (2.0 * lv.energy);
            for (std::size_t s = 0; s < dens.size(); ++s) {
                const double mj = s + 0.5;
                const double plus = jn * jn * dens[s].d_plus;
                const double minus = jn1 * jn1 * dens[s].d_minus;
                const double a = sk * 0.5 * (plus - minus);
                const double b = mass_ratio * (plus + minus);
                const double wt = weight(lv.energy - params_.omega * mj);
                const double wb = weight(lv.energy + params_.omega * mj);
                const double term = spectral ? (wt - wb) * a + (wt + wb) * b : (wt + wb) * (a + b);
                acc += -c2 * term;
            }
        }
    }
    return acc.value();
}

std::vector<double> CondensateEvaluator::shells(double r, double theta) const {
    check_point(r, theta);
    const int count = (truncation_.two_j_max + 1) / 2;
    std::vector<double> out(count);
    // Inside an outer parallel loop over grid points the shells run serially.
#pragma omp parallel for schedule(dynamic) if (options_.parallel && !omp_in_parallel())
    for (int s = 0; s < count; ++s) {
        out[s] = shell(2 * s + 1, r, theta);
    }
    return out;
}

double CondensateEvaluator::value(double r, double theta) const {
    const std::vector<double> parts = shells(r, theta);
    return compensated_sum(parts);
}

double condensate_point(const BoundaryKind& bc, const PhysicalParams& params, double r,
                        double theta, Truncation truncation, CondensateOptions options) {
    return CondensateEvaluator(bc, params, truncation, options).value(r, theta);
}

double condensate_nonrotating(const BoundaryKind& bc, const PhysicalParams& params, double r,
                              Truncation truncation, CondensateOptions options) {
    if (params.omega != 0.0) {
        throw DomainError("condensate_nonrotating needs Omega = 0");
    }
    params.validate();
    check_truncation(truncation);
    if (!(r >= 0.0 && r <= params.radius)) {
        throw DomainError("r must lie in [0, R]");
    }
    const LevelTable table = LevelTable::build(bc, params, truncation.two_j_max,
                                               truncation.i_max, options.parallel);
    CompensatedSum total;
    for (int two_j = 1; two_j <= truncation.two_j_max; two_j += 2) {
        const int kmag = (two_j + 1) / 2;
        const double degeneracy = (two_j + 1.0) / (4.0 * std::numbers::pi);
        CompensatedSum acc;
        for (int kappa : {-kmag, kmag}) {
            for (int i = 1; i <= truncation.i_max; ++i) {
                const RadialLevel& lv = table.level(two_j, kappa, 1, i, 1);
                const auto [jn, jn1] = specfun::spherical_bessel_pair((two_j - 1) / 2, lv.p * r);
                const double frak_b =
                    params.mass / (2.0 * lv.energy) * degeneracy * (jn * jn + jn1 * jn1);
                const double frak_a =
                    (kappa > 0 ? 0.5 : -0.5) * degeneracy * (jn * jn - jn1 * jn1);
                const double w =
                    options.subtraction == Subtraction::Raw
                        ? thermal_weight(lv.energy, 1, params.beta, params.mu)
                        : thermal_weight_subtracted(lv.energy, 1, params.beta, params.mu);
                const double term = bc.is_mit() ? w * (frak_a + frak_b) : w * frak_b;
                acc += -lv.norm * lv.norm * term;
            }
        }
        total += acc.value();
    }
    return total.value();
}

namespace {

CondensateGrid empty_grid(const std::vector<double>& r_values,
                          const std::vector<double>& theta_values, Truncation truncation) {
    CondensateGrid grid;
    grid.r_values = r_values;
    grid.theta_values = theta_values;
    grid.truncation = truncation;
    grid.values.assign(theta_values.size(), std::vector<double>(r_values.size(), 0.0));
    return grid;
}

void check_grid(const CondensateGrid& grid, double radius) {
    for (double r : grid.r_values) {
        if (!(r >= 0.0 && r <= radius)) {
            throw DomainError("r grid must lie in [0, R]");
        }
    }
    for (double t : grid.theta_values) {
        if (!(t >= 0.0 && t <= std::numbers::pi)) {
            throw DomainError("theta grid must lie in [0, pi]");
        }
    }
}

} // namespace

CondensateGrid condensate_grid(const BoundaryKind& bc, const PhysicalParams& params,
                               const std::vector<double>& r_values,
                               const std::vector<double>& theta_values, Truncation truncation,
                               CondensateOptions options) {
    CondensateGrid grid = empty_grid(r_values, theta_values, truncation);
    check_grid(grid, params.radius);
    const CondensateEvaluator eval(bc, params, truncation, options);

    const long nr = static_cast<long>(r_values.size());
    const long points = nr * static_cast<long>(theta_values.size());
    std::vector<double> tails(points, 0.0);
#pragma omp parallel for schedule(dynamic) if (options.parallel)
    for (long idx = 0; idx < points; ++idx) {
        const long t = idx / nr;
        const long k = idx % nr;
        const std::vector<double> parts = eval.shells(r_values[k], theta_values[t]);
        grid.values[t][k] = compensated_sum(parts);
        tails[idx] = std::abs(parts.back());
    }
    for (double tail : tails) {
        grid.tail_estimate = std::max(grid.tail_estimate, tail);
    }
    return grid;
}

CondensateGrid condensate_grid_serial(const BoundaryKind& bc, const PhysicalParams& params,
                                      const std::vector<double>& r_values,
                                      const std::vector<double>& theta_values,
                                      Truncation truncation, Subtraction subtraction) {
    CondensateGrid grid = empty_grid(r_values, theta_values, truncation);
    check_grid(grid, params.radius);
    const CondensateEvaluator eval(bc, params, truncation, {subtraction, false});
    for (std::size_t t = 0; t < theta_values.size(); ++t) {
        for (std::size_t k = 0; k < r_values.size(); ++k) {
            const std::vector<double> parts = eval.shells(r_values[k], theta_values[t]);
            grid.values[t][k] = compensated_sum(parts);
            grid.tail_estimate = std::max(grid.tail_estimate, std::abs(parts.back()));
        }
    }
    return grid;
}

} // namespace rotdirac
