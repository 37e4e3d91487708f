#pragma once

// CSV and JSON renderings of spectra and condensate grids. Numbers are
// written with 17 significant digits so files round-trip exactly.

#include "rotdirac/boundary.hpp"
#include "rotdirac/condensate.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rotdirac {

/// Ordered (key, value) pairs recorded alongside a dataset.
using Metadata = std::vector<std::pair<std::string, std::string>>;

std::string format_real(double v);

/// Header `esign,two_j,two_mj,kappa,i,pR,E,Etilde,C`, one row per mode.
std::string spectrum_csv(std::span<const QuantizedMode> modes, double radius);
std::string spectrum_json(std::span<const QuantizedMode> modes, double radius,
                          const Metadata& meta);

/// `# key=value` comment lines, then `r,theta,value` rows (theta-major).
std::string condensate_csv(const CondensateGrid& grid, const Metadata& meta);
std::string condensate_json(const CondensateGrid& grid, const Metadata& meta);

} // namespace rotdirac
