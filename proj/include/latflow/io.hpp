/* Serialization helpers: exact-rational JSON round trips, RFC 4180 CSV, and
 * a fixed 17-significant-digit float format so emitted files are
 * byte-reproducible across runs and platforms.
 */
#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "latflow/mat.hpp"

namespace latflow {

using Json = nlohmann::ordered_json;

/// "p" or "p/q" canonical string.
Json json_of(const Rational& r);
Json json_of(const std::vector<Rational>& v);
Json json_of(const std::vector<Int>& v);
/// Row-major nested arrays of canonical rational strings.
Json json_of(const MatQ& Y);

/// Accepts strings in "p/q" / decimal form and exact JSON integers.
Rational rational_from_json(const Json& j);
MatQ matrix_from_json(const Json& j);
std::vector<Rational> rational_vector_from_json(const Json& j);

/// Shortest float form that round-trips (17 significant digits).
std::string format_double(double x);

/// RFC 4180 field quoting (quotes only when the field needs it).
std::string csv_field(const std::string& s);
std::string csv_row(const std::vector<std::string>& fields);

} // namespace latflow
