#include "rotdirac/params.hpp"

#include "rotdirac/errors.hpp"

#include <cmath>
#include <sstream>

namespace rotdirac {

void BoundaryKind::validate() const {
    if (type == BoundaryType::Mit && varsigma != 1 && varsigma != -1) {
        throw DomainError("MIT boundary needs varsigma = +1 or -1");
    }
    if (type == BoundaryType::Spectral && varsigma != 0) {
        throw DomainError("spectral boundary takes no varsigma");
    }
}

std::string BoundaryKind::name() const {
    if (type == BoundaryType::Spectral) {
        return "spectral";
    }
    return varsigma > 0 ? "mit" : "mit-chiral";
}

void require_subluminal(double omega, double radius) {
    if (!(omega * radius < 1.0)) {
        std::ostringstream msg;
        msg << "faster-than-light boundary: Omega*R = " << omega * radius << " must be < 1";
        throw FasterThanLightBoundary(msg.str());
    }
}

void PhysicalParams::validate() const {
    if (!std::isfinite(mass) || mass < 0.0) {
        throw DomainError("mass M must be finite and >= 0");
    }
    if (!std::isfinite(radius) || radius <= 0.0) {
        throw DomainError("radius R must be finite and > 0");
    }
    if (!std::isfinite(omega) || omega < 0.0) {
        throw DomainError("angular velocity Omega must be finite and >= 0");
    }
    if (!std::isfinite(beta) || beta <= 0.0) {
        throw DomainError("inverse temperature beta must be finite and > 0");
    }
    if (!std::isfinite(mu)) {
        throw DomainError("chemical potential mu must be finite");
    }
    require_subluminal(omega, radius);
}

} // namespace rotdirac
