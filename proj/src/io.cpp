#include "latflow/io.hpp"

#include <cstdio>

namespace latflow {

Json json_of(const Rational& r) { return to_string(r); }

Json json_of(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& r : v) a.push_back(json_of(r));
    return a;
}

Json json_of(const std::vector<Int>& v) {
    Json a = Json::array();
    for (const auto& z : v) a.push_back(z.get_str());
    return a;
}

Json json_of(const MatQ& Y) {
    Json rows = Json::array();
    for (int i = 0; i < Y.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < Y.cols(); ++j) row.push_back(json_of(Y(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    throw PreconditionError(
        "rational_from_json: entries must be strings (\"p/q\" or decimal) or integers; "
        "got " + j.dump());
}

MatQ matrix_from_json(const Json& j) {
    require(j.is_array() && !j.empty(), "matrix_from_json: expected a non-empty array of rows");
    const int rows = static_cast<int>(j.size());
    require(j[0].is_array() && !j[0].empty(), "matrix_from_json: rows must be non-empty arrays");
    const int cols = static_cast<int>(j[0].size());
    MatQ Y(rows, cols);
    for (int i = 0; i < rows; ++i) {
        require(j[i].is_array() && static_cast<int>(j[i].size()) == cols,
                "matrix_from_json: ragged rows");
        for (int c = 0; c < cols; ++c) Y(i, c) = rational_from_json(j[i][c]);
    }
    return Y;
}

std::vector<Rational> rational_vector_from_json(const Json& j) {
    require(j.is_array(), "rational_vector_from_json: expected an array");
    std::vector<Rational> v;
    for (const auto& e : j) v.push_back(rational_from_json(e));
    return v;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_field(const std::string& s) {
    bool needs = s.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ",";
        out += csv_field(fields[i]);
    }
    out += "\r\n";
    return out;
}

} // namespace latflow
