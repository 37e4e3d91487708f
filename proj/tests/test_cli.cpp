#include "rotdirac/cli.hpp"
#include "rotdirac/errors.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace rotdirac;
using namespace rotdirac::cli;

namespace {

constexpr double kPi = std::numbers::pi;

std::string config_error_key(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.key();
    }
    return "";
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

int call(std::vector<std::string> args) {
    args.insert(args.begin(), "rotdirac");
    std::vector<char*> argv;
    for (std::string& a : args) {
        argv.push_back(a.data());
    }
    return main_entry(static_cast<int>(argv.size()), argv.data());
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "rotdirac_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("parse examples") {
    const RunConfig c = parse_config("Omega=0.5 R=1 beta=2 M=1 bc=spectral");
    CHECK(c.params.omega == 0.5);
    CHECK(c.params.radius == 1.0);
    CHECK(c.params.beta == 2.0);
    CHECK(c.params.mass == 1.0);
    CHECK_FALSE(c.boundary.is_mit());

    const RunConfig chiral = parse_config("bc=mit varsigma=-1 M=1");
    CHECK(chiral.boundary.is_mit());
    CHECK(chiral.boundary.varsigma == -1);
    CHECK(chiral.boundary.name() == "mit-chiral");
    CHECK(parse_config("bc=mit").boundary.varsigma == 1);

    const RunConfig d = parse_config("");
    CHECK(d.truncation.two_j_max == 41);
    CHECK(d.truncation.i_max == 60);
    CHECK(d.subtraction == Subtraction::Vacuum);
    CHECK(d.theta_grid.values() == std::vector<double>{kPi / 2});
    CHECK(d.r_grid.values().size() == 101);
    CHECK(d.r_grid.values().back() == 1.0);
}

TEST_CASE("parse errors name the offending key") {
    CHECK(config_error_key("Omega=1.2 R=1") == "Omega");
    CHECK(config_error_key("Omega=0.5 R=2") == "Omega");
    CHECK(config_error_key("beta=0") == "beta");
    CHECK(config_error_key("beta=-1") == "beta");
    CHECK(config_error_key("colour=blue") == "colour");
    CHECK(config_error_key("M=abc") == "M");
    CHECK(config_error_key("M=-1") == "M");
    CHECK(config_error_key("R=0") == "R");
    CHECK(config_error_key("imax=2.5") == "imax");
    CHECK(config_error_key("jmax=1/2") == "jmax");
    CHECK(config_error_key("jmax=3") == "jmax");
    CHECK(config_error_key("varsigma=-1") == "varsigma");
    CHECK(config_error_key("bc=mit varsigma=2") == "varsigma");
    CHECK(config_error_key("bc=robin") == "bc");
    CHECK(config_error_key("format=xml") == "format");
    CHECK(config_error_key("subtraction=half") == "subtraction");
    CHECK(config_error_key("preset=fig3a") == "preset");
    CHECK(config_error_key("r-grid=0:2:5") == "r-grid");
    CHECK(config_error_key("theta-grid=0:4:5") == "theta-grid");
    CHECK(config_error_key("r-grid=0:1") == "r-grid");

    try {
        parse_config("Omega=1.2 R=1");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("faster-than-light") != std::string::npos);
    }
    std::string beta_msg;
    std::string omega_msg;
    try {
        parse_config("beta=0");
    } catch (const ConfigError& e) {
        beta_msg = e.what();
    }
    try {
        parse_config("Omega=1");
    } catch (const ConfigError& e) {
        omega_msg = e.what();
    }
    CHECK(beta_msg != omega_msg);
    CHECK_FALSE(beta_msg.empty());
}

TEST_CASE("reals and half-integers") {
    CHECK(parse_real("x", "pi") == kPi);
    CHECK(parse_real("x", "-pi/2") == -kPi / 2);
    CHECK(parse_real("x", "3pi/4") == doctest::Approx(3 * kPi / 4).epsilon(1e-16));
    CHECK(parse_real("x", "0.5*pi") == kPi / 2);
    CHECK(parse_real("x", " 1e-3 ") == 1e-3);
    CHECK_THROWS_AS(parse_real("x", "1.0.0"), ConfigError);
    CHECK_THROWS_AS(parse_real("x", ""), ConfigError);
    CHECK(parse_two_j("j", "41/2") == 41);
    CHECK(parse_two_j("j", "20.5") == 41);
    CHECK(parse_two_j("j", "3/2") == 3);
    CHECK_THROWS_AS(parse_two_j("j", "2"), ConfigError);

    const auto kv = parse_key_values("a=1 # comment b=2\nc=3\n  a=4");
    CHECK(kv.size() == 2);
    CHECK(kv.at("a") == "4");
    CHECK(kv.at("c") == "3");
    CHECK(parse_config("theta-grid=0:pi:5").theta_grid.values().back() == kPi);
}

TEST_CASE("serialize round trip") {
    std::vector<std::string> texts = {
        "",
        "bc=mit varsigma=-1 M=0.3 R=2 Omega=0.49 beta=0.7 mu=-0.2 jmax=11/2 imax=7 "
        "r-grid=0:2:9 theta-grid=0.1:3pi/4:4 subtraction=raw format=json threads=3 serial=true",
        "command=zeros order=4 count=7 out=/tmp/z.csv",
        "command=condensate preset=fig2d r-grid=0:1:11 out=dir",
        "command=verify M=1/3 Omega=0.1"};
    texts[4] = "command=verify M=0.3333333333333333 Omega=0.1";
    for (const std::string& text : texts) {
        const RunConfig a = parse_config(text);
        const RunConfig b = parse_config(serialize_config(a));
        CHECK(a == b);
        CHECK(serialize_config(a) == serialize_config(b));
    }
}

TEST_CASE("presets") {
    CHECK(preset_names().size() == 12);
    CHECK(preset_curves("fig1a").size() == 5);
    CHECK(preset_curves("fig2c").size() == 3);
    CHECK(preset_curves("fig2d").size() == 8);
    CHECK(preset_curves("fig1d").size() == 4);
    CHECK(preset_curves("fig1e").size() == 4);
    for (const PresetCurve& c : preset_curves("fig1a")) {
        CHECK(c.params.beta == 2.0);
        CHECK(c.params.mass == 1.0);
        CHECK(c.theta == kPi / 2);
        CHECK_FALSE(c.boundary.is_mit());
    }
    for (const PresetCurve& c : preset_curves("fig2f")) {
        CHECK(c.params.beta == 0.5);
        CHECK(c.params.omega == 0.8);
        CHECK(c.boundary.is_mit());
    }
    CHECK_THROWS_AS(preset_curves("fig1g"), ConfigError);
}

TEST_CASE("zeros subcommand") {
    std::ostringstream out;
    std::ostringstream err;
    RunConfig c = parse_config("command=zeros order=1 count=3");
    CHECK(run(c, out, err) == 0);
    const std::string text = out.str();
    CHECK(text.rfind("i,zero\n", 0) == 0);
    CHECK(text.find("1,4.4934094579090642") != std::string::npos);
    int lines = 0;
    for (char ch : text) {
        lines += ch == '\n';
    }
    CHECK(lines == 4);
}

TEST_CASE("verify subcommand exits 0 at Omega R = 0.99") {
    for (const char* bc : {"bc=spectral", "bc=mit", "bc=mit varsigma=-1"}) {
        std::ostringstream out;
        std::ostringstream err;
        RunConfig c = parse_config(std::string("command=verify Omega=0.99 M=1 jmax=15/2 imax=8 ") + bc);
        CHECK(run(c, out, err) == 0);
        CHECK(out.str().find("violations=0") != std::string::npos);
        CHECK(out.str().find("status: ok") != std::string::npos);
    }
}

TEST_CASE("serial condensate output is byte identical") {
    const auto a = scratch("serial_a.csv");
    const auto b = scratch("serial_b.csv");
    const auto par = scratch("parallel.csv");
    const std::string common = "command=condensate bc=mit M=1 Omega=0.6 beta=0.5 jmax=9/2 imax=8 "
                               "r-grid=0:1:6 theta-grid=0.5:pi/2:2 ";
    std::ostringstream out;
    std::ostringstream err;
    CHECK(run(parse_config(common + "serial=true out=" + a.string()), out, err) == 0);
    CHECK(run(parse_config(common + "serial=true out=" + b.string()), out, err) == 0);
    CHECK(run(parse_config(common + "threads=3 out=" + par.string()), out, err) == 0);
    const std::string text = read_file(a);
    CHECK_FALSE(text.empty());
    CHECK(text == read_file(b));
    CHECK(text == read_file(par));
    CHECK(text.find("# tail_estimate=") != std::string::npos);
    CHECK(text.find("\nr,theta,value\n") != std::string::npos);

    std::ostringstream json;
    CHECK(run(parse_config(common + "format=json serial=true"), json, err) == 0);
    CHECK(json.str().find("\"values\"") != std::string::npos);
}

TEST_CASE("command line flags override the config file") {
    const auto cfg = scratch("run.cfg");
    const auto out = scratch("override.txt");
    {
        std::ofstream f(cfg);
        f << "# settings\nbc=mit\nM=1\nOmega=0.3\njmax=5/2\nimax=3\nout=" << scratch("ignored.txt").string()
          << "\n";
    }
    CHECK(call({"verify", "--config", cfg.string(), "--Omega", "0.7", "--out", out.string()}) == 0);
    const std::string text = read_file(out);
    CHECK(text.find("bc=mit OmegaR=0.69999999999999996") != std::string::npos);

    CHECK(call({"verify", "--config", cfg.string(), "--Omega", "1.5"}) == 2);
    CHECK(call({"condensate", "--beta", "0"}) == 2);
    CHECK(call({"zeros", "--order", "1", "--count", "2", "--out", out.string()}) == 0);
    CHECK(read_file(out) == "i,zero\n1,4.4934094579090642\n2,7.7252518369377068\n");
}

TEST_CASE("preset run writes one file per curve") {
    const auto dir = scratch("preset_fig1a");
    std::filesystem::remove_all(dir);
    std::ostringstream out;
    std::ostringstream err;
    const RunConfig c =
        parse_config("command=condensate preset=fig1a jmax=5/2 imax=4 r-grid=0:1:5 out=" +
                     dir.string());
    CHECK(run(c, out, err) == 0);
    int files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        CHECK(entry.path().extension() == ".csv");
        CHECK(entry.path().filename().string().rfind("fig1a_Omega=", 0) == 0);
        ++files;
    }
    CHECK(files == 5);
    const std::string first = read_file(dir / "fig1a_Omega=0.8.csv");
    CHECK(first.find("# beta=2") != std::string::npos);
    CHECK(first.find("# preset=fig1a") != std::string::npos);
}
