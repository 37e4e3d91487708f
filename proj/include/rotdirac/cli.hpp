#pragma once

// Run configuration and the command-line front end.
//
// A configuration is a flat list of key=value tokens (whitespace or newline
// separated, `#` starts a comment). Command-line flags use the same keys and
// override values read from --config.

#include "rotdirac/condensate.hpp"
#include "rotdirac/params.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rotdirac::cli {

enum class Command { Zeros, Spectrum, Condensate, Verify };

/// `count` equally spaced points from `first` to `last` inclusive.
struct GridSpec {
    double first = 0.0;
    double last = 1.0;
    int count = 101;

    std::vector<double> values() const;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

struct RunConfig {
    Command command = Command::Condensate;
    BoundaryKind boundary = BoundaryKind::spectral();
    PhysicalParams params;
    GridSpec r_grid{0.0, 1.0, 101};
    GridSpec theta_grid;  ///< defaults to the single angle pi/2
    Truncation truncation;
    Subtraction subtraction = Subtraction::Vacuum;
    std::string preset;  ///< empty, or fig1a ... fig2f
    std::string out;     ///< file (or directory for presets); empty means stdout
    std::string format = "csv";
    int threads = 0;  ///< 0 leaves the OpenMP default
    bool serial = false;
    int order = 0;   ///< zeros: Bessel order
    int count = 10;  ///< zeros: number of roots

    RunConfig();

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Reals accept plain numbers and multiples of pi: "pi", "-pi/2", "3pi/4", "0.5*pi".
double parse_real(const std::string& key, std::string_view text);

/// j given as "41/2" or "20.5"; returns 2j.
int parse_two_j(const std::string& key, std::string_view text);

/// Splits key=value tokens. Later duplicates win.
std::map<std::string, std::string> parse_key_values(std::string_view text);

/// Builds and validates a configuration. Throws ConfigError naming the key.
RunConfig build_config(const std::map<std::string, std::string>& values);

RunConfig parse_config(std::string_view text);

/// key=value lines that parse_config maps back to an identical RunConfig.
std::string serialize_config(const RunConfig& config);

std::vector<std::string> preset_names();

struct PresetCurve {
    std::string label;  ///< e.g. "Omega=0.4"
    BoundaryKind boundary;
    PhysicalParams params;
    double theta = 0.0;
};

/// Curves of a dataset preset. Throws ConfigError for an unknown name.
std::vector<PresetCurve> preset_curves(const std::string& name);

/// Executes a validated configuration. Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command-line entry point.
int main_entry(int argc, char** argv);

} // namespace rotdirac::cli
