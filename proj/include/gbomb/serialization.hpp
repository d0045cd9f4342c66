// serialization.hpp: JSON forms of states, channels, generators, series and
// reports; config parsing; CSV formatting and atomic file output.
//
// Matrices are nested row arrays, vectors flat arrays, complex numbers {re, im}.

#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "gbomb/classifier.hpp"
#include "gbomb/errors.hpp"
#include "gbomb/thermalization.hpp"

namespace gbomb {

using Json = nlohmann::json;

/// Malformed or missing config content (CLI exit code 1).
class ConfigError : public Error {
public:
    using Error::Error;
};

Json to_json(const Matrix& m);
Json to_json(const Vector& v);
Json to_json(const GaussianState& s);
Json to_json(const GaussianChannel& c);
Json to_json(const Generators& g);
Json to_json(const GeneratorSeries& s);
Json to_json(const CpReport& r);
Json to_json(const ThermalReport& r);
Json to_json(const DynamicsReport& r);
Json to_json(const OscillatorBathSetup& s);

Matrix matrix_from_json(const Json& j, const std::string& what);
Vector vector_from_json(const Json& j, const std::string& what);
std::complex<double> complex_from_json(const Json& j, const std::string& what);
GaussianState state_from_json(const Json& j, const std::string& what);
GaussianChannel channel_from_json(const Json& j);
Generators generators_from_json(const Json& j);
GeneratorSeries series_from_json(const Json& j);

/// {F_S, alpha_S?, F_A, alpha_A?, G, ancilla, dt}. The ancilla is either a state
/// {mean, cov} or {"thermal_nu": nu} (thermal in every ancilla mode).
JointSetup joint_setup_from_json(const Json& j);
Json to_json(const JointSetup& s);

/// {E_S, E_A, nu_A, dt, G} where G is a matrix, {"rwa": {g1, gw}} or
/// {"ladder": {g: {re, im}, h: {re, im}}}.
OscillatorBathSetup bath_setup_from_json(const Json& j);

/// Parses a whole file; throws ConfigError on I/O or syntax errors.
Json read_json_file(const std::string& path);

/// 17 significant digits, round-trippable.
std::string format_double(double x);

/// One CSV line (no trailing newline); fields are written verbatim.
std::string csv_line(const std::vector<std::string>& fields);

/// Writes to path.tmp and renames over path. Throws ConfigError on failure.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace gbomb
