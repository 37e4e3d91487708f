#include "rotdirac/cli.hpp"

#include "rotdirac/errors.hpp"
#include "rotdirac/output.hpp"
#include "rotdirac/specfun.hpp"
#include "rotdirac/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <algorithm>
#include <cstdio>
#include <cctype>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>

namespace rotdirac::cli {
namespace {

constexpr double kPi = std::numbers::pi;

const std::set<std::string> kKnownKeys = {
    "command", "bc",     "varsigma",   "M",      "R",       "Omega",  "beta",
    "mu",      "jmax",   "imax",       "r-grid", "theta-grid", "subtraction",
    "preset",  "out",    "format",     "threads", "serial", "order",  "count"};

// Short form for file labels: 0.8 rather than 0.80000000000000004.
std::string label_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

std::string trim(std::string_view s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) {
        ++a;
    }
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) {
        --b;
    }
    return std::string(s.substr(a, b - a));
}

double parse_plain(const std::string& key, std::string_view s) {
    double v = 0.0;
    const char* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
        throw ConfigError(key, "malformed number '" + std::string(s) + "'");
    }
    return v;
}

int parse_int(const std::string& key, std::string_view text) {
    const std::string s = trim(text);
    int v = 0;
    const char* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc() || ptr != end) {
        throw ConfigError(key, "malformed integer '" + s + "'");
    }
    return v;
}

bool parse_bool(const std::string& key, const std::string& s) {
    if (s == "true" || s == "1" || s == "yes") {
        return true;
    }
    if (s == "false" || s == "0" || s == "no") {
        return false;
    }
    throw ConfigError(key, "expected true or false, got '" + s + "'");
}

GridSpec parse_grid(const std::string& key, const std::string& s) {
    const std::size_t c1 = s.find(':');
    const std::size_t c2 = c1 == std::string::npos ? c1 : s.find(':', c1 + 1);
    if (c2 == std::string::npos || s.find(':', c2 + 1) != std::string::npos) {
        throw ConfigError(key, "grid must look like first:last:count, got '" + s + "'");
    }
    GridSpec g;
    g.first = parse_real(key, std::string_view(s).substr(0, c1));
    g.last = parse_real(key, std::string_view(s).substr(c1 + 1, c2 - c1 - 1));
    g.count = parse_int(key, std::string_view(s).substr(c2 + 1));
    if (g.count < 1) {
        throw ConfigError(key, "grid needs at least one point");
    }
    return g;
}

void check_grid_range(const std::string& key, const GridSpec& g, double lo, double hi,
                      const std::string& range) {
    if (!(g.first >= lo && g.first <= hi && g.last >= lo && g.last <= hi)) {
        throw ConfigError(key, "grid endpoints must lie in " + range);
    }
}

std::string format_two_j(int two_j) { return std::to_string(two_j) + "/2"; }

std::string command_name(Command c) {
    switch (c) {
    case Command::Zeros:
        return "zeros";
    case Command::Spectrum:
        return "spectrum";
    case Command::Condensate:
        return "condensate";
    case Command::Verify:
        return "verify";
    }
    return "condensate";
}

std::string grid_text(const GridSpec& g) {
    return format_real(g.first) + ":" + format_real(g.last) + ":" + std::to_string(g.count);
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw Error("cannot open output file " + path);
    }
    file << text;
    if (!file) {
        throw Error("failed writing " + path);
    }
}

Metadata physics_meta(const BoundaryKind& bc, const PhysicalParams& p, Subtraction sub) {
    Metadata meta = {{"bc", bc.is_mit() ? "mit" : "spectral"}};
    if (bc.is_mit()) {
        meta.emplace_back("varsigma", std::to_string(bc.varsigma));
    }
    meta.emplace_back("M", format_real(p.mass));
    meta.emplace_back("R", format_real(p.radius));
    meta.emplace_back("Omega", format_real(p.omega));
    meta.emplace_back("beta", format_real(p.beta));
    meta.emplace_back("mu", format_real(p.mu));
    meta.emplace_back("subtraction", sub == Subtraction::Raw ? "raw" : "vacuum");
    return meta;
}

CondensateGrid compute_grid(const BoundaryKind& bc, const PhysicalParams& params,
                            const std::vector<double>& rs, const std::vector<double>& thetas,
                            const RunConfig& config) {
    if (config.serial) {
        return condensate_grid_serial(bc, params, rs, thetas, config.truncation,
                                      config.subtraction);
    }
    return condensate_grid(bc, params, rs, thetas, config.truncation,
                           {config.subtraction, true});
}

std::string render_grid(const CondensateGrid& grid, const Metadata& meta,
                        const std::string& format) {
    return format == "json" ? condensate_json(grid, meta) : condensate_csv(grid, meta);
}

int run_zeros(const RunConfig& config, std::ostream& out) {
    const specfun::BesselZeroTable table = specfun::bessel_zero_table(config.order, config.count);
    std::string text;
    if (config.format == "json") {
        nlohmann::ordered_json doc;
        doc["order"] = table.order;
        doc["zeros"] = table.zeros;
        text = doc.dump(1) + "\n";
    } else {
        text = "i,zero\n";
        for (std::size_t i = 0; i < table.zeros.size(); ++i) {
            text += std::to_string(i + 1) + "," + format_real(table.zeros[i]) + "\n";
        }
    }
    write_text(config.out, text, out);
    return 0;
}

int run_spectrum(const RunConfig& config, std::ostream& out) {
    const std::vector<QuantizedMode> modes =
        enumerate_spectrum(config.boundary, config.params, config.truncation.two_j_max,
                           config.truncation.i_max, !config.serial);
    const std::string text =
        config.format == "json"
            ? spectrum_json(modes, config.params.radius,
                            physics_meta(config.boundary, config.params, config.subtraction))
            : spectrum_csv(modes, config.params.radius);
    write_text(config.out, text, out);
    return 0;
}

int run_condensate(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const std::vector<double> rs = config.r_grid.values();
    if (config.preset.empty()) {
        const CondensateGrid grid = compute_grid(config.boundary, config.params, rs,
                                                 config.theta_grid.values(), config);
        write_text(config.out,
                   render_grid(grid,
                               physics_meta(config.boundary, config.params, config.subtraction),
                               config.format),
                   out);
        return 0;
    }
    const std::filesystem::path dir = config.out.empty() ? "." : config.out;
    std::filesystem::create_directories(dir);
    for (const PresetCurve& curve : preset_curves(config.preset)) {
        for (double r : rs) {
            if (r > curve.params.radius) {
                throw ConfigError("r-grid", "grid extends beyond the preset radius");
            }
        }
        const CondensateGrid grid = compute_grid(curve.boundary, curve.params, rs,
                                                 {curve.theta}, config);
        Metadata meta = {{"preset", config.preset}, {"curve", curve.label}};
        const Metadata phys = physics_meta(curve.boundary, curve.params, config.subtraction);
        meta.insert(meta.end(), phys.begin(), phys.end());
        meta.emplace_back("theta", format_real(curve.theta));
        const std::filesystem::path file =
            dir / (config.preset + "_" + curve.label + "." + config.format);
        write_text(file.string(), render_grid(grid, meta, config.format), out);
        err << "wrote " << file.string() << "\n";
    }
    return 0;
}

int run_verify(const RunConfig& config, std::ostream& out) {
    const std::vector<QuantizedMode> modes =
        enumerate_spectrum(config.boundary, config.params, config.truncation.two_j_max,
                           config.truncation.i_max, !config.serial);
    const VacuumReport vacuum =
        verify_vacuum_equivalence(modes, config.params.omega, config.params.radius);
    const std::vector<double> thetas = {0.0, 0.4, kPi / 4.0, kPi / 2.0, 2.0, kPi};
    const std::vector<double> phis = {0.0, 1.3};
    const BoundaryReport boundary = check_boundary(config.boundary, modes, config.params.mass,
                                                   config.params.radius, thetas, phis);
    const bool ok = vacuum.ok() && boundary.ok();

    std::string text;
    if (config.format == "json") {
        nlohmann::ordered_json doc;
        doc["bc"] = config.boundary.name();
        doc["omega_r"] = vacuum.omega_r;
        doc["modes"] = vacuum.checked;
        doc["vacuum_violations"] = vacuum.violations.size();
        doc["min_abs_energy_tilde"] = vacuum.min_abs_energy_tilde;
        doc["worst_spectral_residual"] = boundary.worst_spectral;
        doc["worst_mit_relation"] = boundary.worst_mit_relation;
        doc["worst_mit_density"] = boundary.worst_mit_density;
        doc["worst_quantization"] = boundary.worst_quantization;
        doc["ok"] = ok;
        text = doc.dump(1) + "\n";
    } else {
        std::ostringstream s;
        s << "bc=" << config.boundary.name() << " OmegaR=" << format_real(vacuum.omega_r)
          << " modes=" << vacuum.checked << "\n";
        s << "vacuum: violations=" << vacuum.violations.size()
          << " min|Etilde|=" << format_real(vacuum.min_abs_energy_tilde) << "\n";
        for (const QuantizedMode& m : vacuum.violations) {
            s << "  violation esign=" << m.qn.esign << " two_j=" << m.qn.two_j
              << " two_mj=" << m.qn.two_mj << " kappa=" << m.qn.kappa << " i=" << m.qn.i
              << " E=" << format_real(m.energy) << " Etilde=" << format_real(m.energy_tilde)
              << "\n";
        }
        if (config.boundary.is_mit()) {
            s << "boundary: relation=" << format_real(boundary.worst_mit_relation)
              << " scalar_density=" << format_real(boundary.worst_mit_density)
              << " quantization=" << format_real(boundary.worst_quantization) << "\n";
        } else {
            s << "boundary: spectral=" << format_real(boundary.worst_spectral) << "\n";
        }
        s << (ok ? "status: ok" : "status: FAILED") << "\n";
        text = s.str();
    }
    write_text(config.out, text, out);
    return ok ? 0 : 1;
}

} // namespace

std::vector<double> GridSpec::values() const {
    if (count == 1) {
        return {first};
    }
    std::vector<double> v(count);
    for (int k = 0; k < count; ++k) {
        v[k] = first + (last - first) * k / (count - 1);
    }
    v.back() = last;
    return v;
}

RunConfig::RunConfig() : theta_grid{kPi / 2.0, kPi / 2.0, 1} {}

double parse_real(const std::string& key, std::string_view text) {
    std::string s = trim(text);
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    const std::size_t pos = s.find("pi");
    if (pos == std::string::npos) {
        return parse_plain(key, s);
    }
    std::string head = s.substr(0, pos);
    const std::string tail = s.substr(pos + 2);
    if (!head.empty() && head.back() == '*') {
        head.pop_back();
    }
    double coef = 1.0;
    if (head == "-") {
        coef = -1.0;
    } else if (!head.empty() && head != "+") {
        coef = parse_plain(key, head);
    }
    double den = 1.0;
    if (!tail.empty()) {
        if (tail[0] != '/') {
            throw ConfigError(key, "malformed number '" + std::string(text) + "'");
        }
        den = parse_plain(key, std::string_view(tail).substr(1));
        if (den == 0.0) {
            throw ConfigError(key, "division by zero in '" + std::string(text) + "'");
        }
    }
    return coef * kPi / den;
}

int parse_two_j(const std::string& key, std::string_view text) {
    const std::string s = trim(text);
    int two_j = 0;
    if (s.size() > 2 && s.substr(s.size() - 2) == "/2") {
        two_j = parse_int(key, std::string_view(s).substr(0, s.size() - 2));
    } else {
        const double j = parse_plain(key, s);
        const double twice = 2.0 * j;
        if (twice != std::round(twice) || std::abs(twice) > 1e6) {
            throw ConfigError(key, "j must be a half-integer, got '" + s + "'");
        }
        two_j = static_cast<int>(twice);
    }
    if (two_j < 1 || two_j % 2 == 0) {
        throw ConfigError(key, "j must be a positive half-integer, got '" + s + "'");
    }
    return two_j;
}

std::map<std::string, std::string> parse_key_values(std::string_view text) {
    std::map<std::string, std::string> out;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream tokens(line);
        std::string tok;
        while (tokens >> tok) {
            const std::size_t eq = tok.find('=');
            if (eq == std::string::npos || eq == 0) {
                throw ConfigError(tok, "expected key=value");
            }
            out[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
    }
    return out;
}

RunConfig build_config(const std::map<std::string, std::string>& values) {
    for (const auto& [key, value] : values) {
        if (!kKnownKeys.count(key)) {
            throw ConfigError(key, "unknown key");
        }
    }
    auto find = [&](const std::string& key) -> const std::string* {
        const auto it = values.find(key);
        return it == values.end() ? nullptr : &it->second;
    };

    RunConfig c;
    if (const auto* v = find("command")) {
        if (*v == "zeros") {
            c.command = Command::Zeros;
        } else if (*v == "spectrum") {
            c.command = Command::Spectrum;
        } else if (*v == "condensate") {
            c.command = Command::Condensate;
        } else if (*v == "verify") {
            c.command = Command::Verify;
        } else {
            throw ConfigError("command", "unknown command '" + *v + "'");
        }
    }
    if (const auto* v = find("bc")) {
        if (*v == "spectral") {
            c.boundary = BoundaryKind::spectral();
        } else if (*v == "mit") {
            c.boundary = BoundaryKind::mit(1);
        } else {
            throw ConfigError("bc", "boundary must be spectral or mit, got '" + *v + "'");
        }
    }
    if (const auto* v = find("varsigma")) {
        const int s = *v == "+1" ? 1 : parse_int("varsigma", *v);
        if (s != 1 && s != -1) {
            throw ConfigError("varsigma", "varsigma must be 1 or -1, got '" + *v + "'");
        }
        if (!c.boundary.is_mit()) {
            throw ConfigError("varsigma", "varsigma only applies to bc=mit");
        }
        c.boundary.varsigma = s;
    }

    if (const auto* v = find("M")) {
        c.params.mass = parse_real("M", *v);
        if (c.params.mass < 0.0) {
            throw ConfigError("M", "mass must be >= 0");
        }
    }
    if (const auto* v = find("R")) {
        c.params.radius = parse_real("R", *v);
        if (!(c.params.radius > 0.0)) {
            throw ConfigError("R", "radius must be > 0");
        }
    }
    if (const auto* v = find("Omega")) {
        c.params.omega = parse_real("Omega", *v);
        if (c.params.omega < 0.0) {
            throw ConfigError("Omega", "angular velocity must be >= 0");
        }
    }
    if (const auto* v = find("beta")) {
        c.params.beta = parse_real("beta", *v);
        if (!(c.params.beta > 0.0)) {
            throw ConfigError("beta", "inverse temperature must be > 0");
        }
    }
    if (const auto* v = find("mu")) {
        c.params.mu = parse_real("mu", *v);
    }
    if (!(c.params.omega * c.params.radius < 1.0)) {
        throw ConfigError("Omega", "faster-than-light boundary: Omega*R = " +
                                       format_real(c.params.omega * c.params.radius) +
                                       " must be < 1");
    }

    if (const auto* v = find("jmax")) {
        c.truncation.two_j_max = parse_two_j("jmax", *v);
    }
    if (const auto* v = find("imax")) {
        c.truncation.i_max = parse_int("imax", *v);
        if (c.truncation.i_max < 1) {
            throw ConfigError("imax", "i_max must be >= 1");
        }
    }
    if (const auto* v = find("r-grid")) {
        c.r_grid = parse_grid("r-grid", *v);
    }
    if (const auto* v = find("theta-grid")) {
        c.theta_grid = parse_grid("theta-grid", *v);
    }
    if (const auto* v = find("subtraction")) {
        if (*v == "vacuum") {
            c.subtraction = Subtraction::Vacuum;
        } else if (*v == "raw") {
            c.subtraction = Subtraction::Raw;
        } else {
            throw ConfigError("subtraction", "must be vacuum or raw, got '" + *v + "'");
        }
    }
    if (const auto* v = find("preset")) {
        c.preset = *v;
        preset_curves(c.preset);
    }
    if (const auto* v = find("out")) {
        c.out = *v;
    }
    if (const auto* v = find("format")) {
        if (*v != "csv" && *v != "json") {
            throw ConfigError("format", "format must be csv or json, got '" + *v + "'");
        }
        c.format = *v;
    }
    if (const auto* v = find("threads")) {
        c.threads = parse_int("threads", *v);
        if (c.threads < 0) {
            throw ConfigError("threads", "thread count must be >= 0");
        }
    }
    if (const auto* v = find("serial")) {
        c.serial = parse_bool("serial", *v);
    }
    if (const auto* v = find("order")) {
        c.order = parse_int("order", *v);
        if (c.order < 0) {
            throw ConfigError("order", "Bessel order must be >= 0");
        }
    }
    if (const auto* v = find("count")) {
        c.count = parse_int("count", *v);
        if (c.count < 1) {
            throw ConfigError("count", "count must be >= 1");
        }
    }

    if (c.preset.empty()) {
        check_grid_range("r-grid", c.r_grid, 0.0, c.params.radius, "[0, R]");
    } else {
        check_grid_range("r-grid", c.r_grid, 0.0, 1.0, "[0, 1] for presets");
    }
    check_grid_range("theta-grid", c.theta_grid, 0.0, kPi, "[0, pi]");
    if (c.command == Command::Condensate && c.truncation.two_j_max < 3) {
        throw ConfigError("jmax", "condensate needs j_max >= 3/2");
    }
    return c;
}

RunConfig parse_config(std::string_view text) { return build_config(parse_key_values(text)); }

std::string serialize_config(const RunConfig& c) {
    std::ostringstream s;
    s << "command=" << command_name(c.command) << "\n";
    s << "bc=" << (c.boundary.is_mit() ? "mit" : "spectral") << "\n";
    if (c.boundary.is_mit()) {
        s << "varsigma=" << c.boundary.varsigma << "\n";
    }
    s << "M=" << format_real(c.params.mass) << "\n";
    s << "R=" << format_real(c.params.radius) << "\n";
    s << "Omega=" << format_real(c.params.omega) << "\n";
    s << "beta=" << format_real(c.params.beta) << "\n";
    s << "mu=" << format_real(c.params.mu) << "\n";
    s << "jmax=" << format_two_j(c.truncation.two_j_max) << "\n";
    s << "imax=" << c.truncation.i_max << "\n";
    s << "r-grid=" << grid_text(c.r_grid) << "\n";
    s << "theta-grid=" << grid_text(c.theta_grid) << "\n";
    s << "subtraction=" << (c.subtraction == Subtraction::Raw ? "raw" : "vacuum") << "\n";
    if (!c.preset.empty()) {
        s << "preset=" << c.preset << "\n";
    }
    if (!c.out.empty()) {
        s << "out=" << c.out << "\n";
    }
    s << "format=" << c.format << "\n";
    s << "threads=" << c.threads << "\n";
    s << "serial=" << (c.serial ? "true" : "false") << "\n";
    s << "order=" << c.order << "\n";
    s << "count=" << c.count << "\n";
    return s.str();
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (char fig : {'1', '2'}) {
        for (char panel = 'a'; panel <= 'f'; ++panel) {
            names.push_back(std::string("fig") + fig + panel);
        }
    }
    return names;
}

std::vector<PresetCurve> preset_curves(const std::string& name) {
    const auto names = preset_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        throw ConfigError("preset", "unknown preset '" + name + "'");
    }
    const BoundaryKind bc = name[3] == '1' ? BoundaryKind::spectral() : BoundaryKind::mit(1);
    const char panel = name[4];
    auto params = [](double mass, double beta, double omega) {
        PhysicalParams p;
        p.mass = mass;
        p.radius = 1.0;
        p.omega = omega;
        p.beta = beta;
        p.mu = 0.0;
        return p;
    };

    std::vector<PresetCurve> curves;
    switch (panel) {
    case 'a':
    case 'b': {
        const double beta = panel == 'a' ? 2.0 : 0.5;
        for (double omega : {0.0, 0.2, 0.4, 0.6, 0.8}) {
            curves.push_back({"Omega=" + label_real(omega), bc, params(1.0, beta, omega),
                              kPi / 2.0});
        }
        break;
    }
    case 'c':
        for (double beta : {0.5, 1.0, 2.0}) {
            curves.push_back({"beta=" + label_real(beta), bc, params(1.0, beta, 0.5),
                              kPi / 2.0});
        }
        break;
    case 'd': {
        std::vector<BoundaryKind> kinds = {bc};
        if (bc.is_mit()) {
            kinds.push_back(BoundaryKind::mit(-1));
        }
        for (const BoundaryKind& kind : kinds) {
            for (double mass : {0.0, 0.5, 1.0, 2.0}) {
                std::string label = "M=" + label_real(mass);
                if (kind.is_mit()) {
                    label += "_varsigma=" + std::to_string(kind.varsigma);
                }
                curves.push_back({label, kind, params(mass, 1.0, 0.5), kPi / 2.0});
            }
        }
        break;
    }
    default: {
        const double beta = panel == 'e' ? 2.0 : 0.5;
        const std::vector<std::pair<std::string, double>> angles = {
            {"pi/8", kPi / 8.0}, {"pi/4", kPi / 4.0}, {"3pi/8", 3.0 * kPi / 8.0},
            {"pi/2", kPi / 2.0}};
        for (const auto& [label, theta] : angles) {
            std::string file_label = label;
            std::replace(file_label.begin(), file_label.end(), '/', '_');
            curves.push_back({"theta=" + file_label, bc, params(1.0, beta, 0.8), theta});
        }
        break;
    }
    }
    return curves;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.threads > 0) {
        omp_set_num_threads(config.threads);
    }
    switch (config.command) {
    case Command::Zeros:
        return run_zeros(config, out);
    case Command::Spectrum:
        return run_spectrum(config, out);
    case Command::Condensate:
        return run_condensate(config, out, err);
    case Command::Verify:
        return run_verify(config, out);
    }
    return 0;
}

int main_entry(int argc, char** argv) {
    CLI::App app{"Dirac fermions in a rigidly rotating sphere: spectra, checks and the "
                 "thermal condensate"};
    app.require_subcommand(1);

    const std::vector<std::pair<std::string, std::string>> value_flags = {
        {"bc", "boundary condition: spectral or mit"},
        {"varsigma", "MIT chirality sign, 1 or -1"},
        {"M", "fermion mass"},
        {"R", "sphere radius"},
        {"Omega", "angular velocity"},
        {"beta", "inverse temperature"},
        {"mu", "chemical potential"},
        {"jmax", "largest j, e.g. 41/2"},
        {"imax", "largest radial index"},
        {"r-grid", "radial grid first:last:count"},
        {"theta-grid", "polar grid first:last:count"},
        {"subtraction", "vacuum (default) or raw"},
        {"preset", "dataset preset fig1a..fig2f"},
        {"out", "output file, or directory for presets"},
        {"format", "csv or json"},
        {"threads", "OpenMP thread count"}};

    std::map<std::string, std::string> raw;
    std::map<std::string, CLI::Option*> options;
    for (const auto& [key, help] : value_flags) {
        options[key] = app.add_option("--" + key, raw[key], help);
    }
    bool serial = false;
    CLI::Option* serial_opt = app.add_flag("--serial", serial, "single-threaded, reproducible run");
    std::string config_path;
    app.add_option("--config", config_path, "file of key=value settings")->check(CLI::ExistingFile);

    std::string order_text;
    std::string count_text;
    CLI::App* zeros = app.add_subcommand("zeros", "zeros of j_n");
    CLI::Option* order_opt = zeros->add_option("--order", order_text, "Bessel order n");
    CLI::Option* count_opt = zeros->add_option("--count", count_text, "number of zeros");
    std::vector<CLI::App*> subs = {
        zeros, app.add_subcommand("spectrum", "quantized mode spectrum"),
        app.add_subcommand("condensate", "thermal condensate on an (r, theta) grid"),
        app.add_subcommand("verify", "vacuum-equivalence and boundary-residual checks")};
    for (CLI::App* sub : subs) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        std::map<std::string, std::string> values;
        if (!config_path.empty()) {
            std::ifstream file(config_path);
            std::stringstream buffer;
            buffer << file.rdbuf();
            values = parse_key_values(buffer.str());
        }
        for (const auto& [key, opt] : options) {
            if (opt->count() > 0) {
                values[key] = raw[key];
            }
        }
        if (serial_opt->count() > 0) {
            values["serial"] = serial ? "true" : "false";
        }
        if (order_opt->count() > 0) {
            values["order"] = order_text;
        }
        if (count_opt->count() > 0) {
            values["count"] = count_text;
        }
        for (CLI::App* sub : subs) {
            if (sub->parsed()) {
                values["command"] = sub->get_name();
            }
        }
        const RunConfig config = build_config(values);
        return run(config, std::cout, std::cerr);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace rotdirac::cli
