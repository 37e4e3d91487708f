#include "rotdirac/output.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace rotdirac {
namespace {

nlohmann::ordered_json meta_json(const Metadata& meta) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [key, value] : meta) {
        out[key] = value;
    }
    return out;
}

} // namespace

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string spectrum_csv(std::span<const QuantizedMode> modes, double radius) {
    std::ostringstream out;
    out << "esign,two_j,two_mj,kappa,i,pR,E,Etilde,C\n";
    for (const QuantizedMode& m : modes) {
        out << m.qn.esign << ',' << m.qn.two_j << ',' << m.qn.two_mj << ',' << m.qn.kappa << ','
            << m.qn.i << ',' << format_real(m.p * radius) << ',' << format_real(m.energy) << ','
            << format_real(m.energy_tilde) << ',' << format_real(m.norm) << '\n';
    }
    return out.str();
}

std::string spectrum_json(std::span<const QuantizedMode> modes, double radius,
                          const Metadata& meta) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const QuantizedMode& m : modes) {
        rows.push_back({{"esign", m.qn.esign},
                        {"two_j", m.qn.two_j},
                        {"two_mj", m.qn.two_mj},
                        {"kappa", m.qn.kappa},
                        {"i", m.qn.i},
                        {"pR", m.p * radius},
                        {"E", m.energy},
                        {"Etilde", m.energy_tilde},
                        {"C", m.norm}});
    }
    nlohmann::ordered_json doc;
    doc["meta"] = meta_json(meta);
    doc["modes"] = std::move(rows);
    return doc.dump(1) + "\n";
}

std::string condensate_csv(const CondensateGrid& grid, const Metadata& meta) {
    std::ostringstream out;
    for (const auto& [key, value] : meta) {
        out << "# " << key << '=' << value << '\n';
    }
    out << "# two_j_max=" << grid.truncation.two_j_max << '\n';
    out << "# i_max=" << grid.truncation.i_max << '\n';
    out << "# tail_estimate=" << format_real(grid.tail_estimate) << '\n';
    out << "r,theta,value\n";
    for (std::size_t t = 0; t < grid.theta_values.size(); ++t) {
        for (std::size_t k = 0; k < grid.r_values.size(); ++k) {
            out << format_real(grid.r_values[k]) << ',' << format_real(grid.theta_values[t])
                << ',' << format_real(grid.values[t][k]) << '\n';
        }
    }
    return out.str();
}

std::string condensate_json(const CondensateGrid& grid, const Metadata& meta) {
    nlohmann::ordered_json doc;
    doc["meta"] = meta_json(meta);
    doc["two_j_max"] = grid.truncation.two_j_max;
    doc["i_max"] = grid.truncation.i_max;
    doc["tail_estimate"] = grid.tail_estimate;
    doc["r"] = grid.r_values;
    doc["theta"] = grid.theta_values;
    doc["values"] = grid.values;
    return doc.dump(1) + "\n";
}

} // namespace rotdirac
