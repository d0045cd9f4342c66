// serialization.cpp

#include "gbomb/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace gbomb {

namespace {

const Json& field(const Json& j, const char* key, const std::string& what)
{
    if (!j.is_object() || !j.contains(key)) {
        throw ConfigError(what + ": missing field '" + key + "'");
    }
    return j.at(key);
}

double number(const Json& j, const std::string& what)
{
    if (!j.is_number()) {
        throw ConfigError(what + ": expected a number");
    }
    return j.get<double>();
}

double number_field(const Json& j, const char* key, const std::string& what)
{
    return number(field(j, key, what), what + "." + key);
}

template <typename T>
Json optional_json(const std::optional<T>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

} // namespace

Json to_json(const Matrix& m)
{
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            row.push_back(m(i, k));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const Vector& v)
{
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(v(i));
    }
    return out;
}

Json to_json(const GaussianState& s) { return {{"mean", to_json(s.mean)}, {"cov", to_json(s.cov)}}; }

Json to_json(const GaussianChannel& c) { return {{"T", to_json(c.T)}, {"d", to_json(c.d)}, {"R", to_json(c.R)}}; }

Json to_json(const Generators& g) { return {{"A", to_json(g.A)}, {"b", to_json(g.b)}, {"C", to_json(g.C)}}; }

Json to_json(const GeneratorSeries& s)
{
    Json out = Json::array();
    for (std::size_t k = 0; k < s.terms.size(); ++k) {
        Json term = to_json(s.terms[k]);
        term["k"] = k;
        out.push_back(std::move(term));
    }
    return out;
}

Json to_json(const CpReport& r) { return {{"ok", r.ok}, {"margin", r.margin}}; }

Json to_json(const ThermalReport& r)
{
    return {{"det_G", r.det_G},
            {"trace_GtG", r.trace_GtG},
            {"has_fixed_point", r.has_fixed_point},
            {"nu_infinity", optional_json(r.nu_infinity)},
            {"rate", r.rate},
            {"nu_tilde", optional_json(r.nu_tilde)},
            {"cooling_saturated", r.cooling_saturated},
            {"passivity_ok", r.passivity_ok}};
}

Json to_json(const DynamicsReport& r)
{
    Json out = Json::object();
    for (std::size_t i = 0; i < kDynamicsTypeCount; ++i) {
        out[std::string(dynamics_name(dynamics_type(i)))] = r.present[i];
    }
    return out;
}

Json to_json(const OscillatorBathSetup& s)
{
    return {{"E_S", s.E_S}, {"E_A", s.E_A}, {"nu_A", s.nu_A}, {"dt", s.dt}, {"G", to_json(s.G)}};
}

Json to_json(const JointSetup& s)
{
    return {{"F_S", to_json(s.F_S)},   {"alpha_S", to_json(s.alpha_S)}, {"F_A", to_json(s.F_A)},
            {"alpha_A", to_json(s.alpha_A)}, {"G", to_json(s.G)},      {"ancilla", to_json(s.ancilla)},
            {"dt", s.dt}};
}

Matrix matrix_from_json(const Json& j, const std::string& what)
{
    if (!j.is_array() || j.empty()) {
        throw ConfigError(what + ": expected a nonempty array of rows");
    }
    const std::size_t rows = j.size();
    if (!j[0].is_array()) {
        throw ConfigError(what + ": expected a nonempty array of rows");
    }
    const std::size_t cols = j[0].size();
    Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) {
            throw ConfigError(what + ": rows have different lengths");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = number(j[r][c], what);
        }
    }
    return m;
}

Vector vector_from_json(const Json& j, const std::string& what)
{
    if (!j.is_array()) {
        throw ConfigError(what + ": expected an array");
    }
    Vector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = number(j[i], what);
    }
    return v;
}

std::complex<double> complex_from_json(const Json& j, const std::string& what)
{
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    const double im = j.is_object() && j.contains("im") ? number(j.at("im"), what + ".im") : 0.0;
    return {number_field(j, "re", what), im};
}

GaussianState state_from_json(const Json& j, const std::string& what)
{
    return {vector_from_json(field(j, "mean", what), what + ".mean"),
            matrix_from_json(field(j, "cov", what), what + ".cov")};
}

GaussianChannel channel_from_json(const Json& j)
{
    return {matrix_from_json(field(j, "T", "channel"), "channel.T"), vector_from_json(field(j, "d", "channel"), "channel.d"),
            matrix_from_json(field(j, "R", "channel"), "channel.R")};
}

Generators generators_from_json(const Json& j)
{
    return {matrix_from_json(field(j, "A", "generators"), "generators.A"),
            vector_from_json(field(j, "b", "generators"), "generators.b"),
            matrix_from_json(field(j, "C", "generators"), "generators.C")};
}

GeneratorSeries series_from_json(const Json& j)
{
    if (!j.is_array()) {
        throw ConfigError("series: expected an array of {k, A, b, C}");
    }
    GeneratorSeries s;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].contains("k") || !j[i]["k"].is_number_integer() || j[i]["k"].get<std::size_t>() != i) {
            throw ConfigError("series: terms must be listed with k = 0, 1, 2, ...");
        }
        s.terms.push_back(generators_from_json(j[i]));
    }
    return s;
}

JointSetup joint_setup_from_json(const Json& j)
{
    const std::string what = "setup";
    JointSetup s;
    s.F_S = matrix_from_json(field(j, "F_S", what), "setup.F_S");
    s.F_A = matrix_from_json(field(j, "F_A", what), "setup.F_A");
    s.G = matrix_from_json(field(j, "G", what), "setup.G");
    s.alpha_S = j.contains("alpha_S") ? vector_from_json(j["alpha_S"], "setup.alpha_S") : Vector::Zero(s.F_S.rows());
    s.alpha_A = j.contains("alpha_A") ? vector_from_json(j["alpha_A"], "setup.alpha_A") : Vector::Zero(s.F_A.rows());
    s.dt = number_field(j, "dt", what);
    const Json& anc = field(j, "ancilla", what);
    if (anc.is_object() && anc.contains("thermal_nu")) {
        if (s.F_A.rows() % 2 != 0) {
            throw ConfigError("setup.F_A: odd dimension");
        }
        const double nu = number(anc["thermal_nu"], "setup.ancilla.thermal_nu");
        if (!(nu >= 1.0)) {
            throw InvalidAncillaState("setup.ancilla.thermal_nu must be >= 1");
        }
        s.ancilla = thermal_state(nu, static_cast<int>(s.F_A.rows() / 2));
    } else {
        s.ancilla = state_from_json(anc, "setup.ancilla");
    }
    return s;
}

OscillatorBathSetup bath_setup_from_json(const Json& j)
{
    const std::string what = "bath";
    OscillatorBathSetup s;
    s.E_S = number_field(j, "E_S", what);
    s.E_A = number_field(j, "E_A", what);
    s.nu_A = number_field(j, "nu_A", what);
    s.dt = number_field(j, "dt", what);
    const Json& g = field(j, "G", what);
    if (g.is_array()) {
        s.G = matrix_from_json(g, "bath.G");
    } else if (g.is_object() && g.contains("rwa")) {
        s.G = rwa_coupling(number_field(g["rwa"], "g1", "bath.G.rwa"), number_field(g["rwa"], "gw", "bath.G.rwa"));
    } else if (g.is_object() && g.contains("ladder")) {
        const Json& l = g["ladder"];
        s.G = ladder_coupling(complex_from_json(field(l, "g", "bath.G.ladder"), "bath.G.ladder.g"),
                              complex_from_json(field(l, "h", "bath.G.ladder"), "bath.G.ladder.h"));
    } else {
        throw ConfigError("bath.G: expected a 2x2 matrix, {\"rwa\": ...} or {\"ladder\": ...}");
    }
    return s;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ConfigError("config file '" + path + "': " + e.what());
    }
}

std::string format_double(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_line(const std::vector<std::string>& fields)
{
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += fields[i];
    }
    return out;
}

void write_file_atomic(const std::string& path, const std::string& content)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw ConfigError("cannot write '" + tmp + "'");
        }
        out << content;
        if (!out.flush()) {
            throw ConfigError("write to '" + tmp + "' failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        throw ConfigError("cannot move '" + tmp + "' to '" + path + "': " + ec.message());
    }
}

} // namespace gbomb
