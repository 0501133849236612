#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "octeig/jordan.hpp"

namespace octeig::cli {

using Json = nlohmann::json;

Json to_json(const Octonion& o);
Json to_json(const OctVec3& v);
Json to_json(const JordanMatrix& a);

/// `field` names the location for diagnostics, e.g. "a" or "x".
Octonion octonion_from_json(const Json& j, const std::string& field);
OctVec3 vec3_from_json(const Json& j, const std::string& field = "vector");
JordanMatrix jordan_from_json(const Json& j);

/// A matrix document: either an explicit matrix
///   {"p":..,"m":..,"n":..,"a":[8],"b":[8],"c":[8]}
/// or a built-in example {"example":1|2|3, "p":.., "q":.., "theta":..}.
struct MatrixFile {
  JordanMatrix matrix;
  std::optional<int> example;
  double p = 0.0, q = 1.0, theta = 0.0;
};

/// Builds the example matrix for (example, p, q, theta). Throws ParseError for
/// an unknown example number.
JordanMatrix example_matrix(int example, double p, double q, double theta);

/// Throws ParseError carrying the line/column or the offending field.
MatrixFile parse_matrix_file(const std::string& text);
MatrixFile load_matrix_file(const std::string& path);

/// Accepts a JSON array of 8 numbers or a bare real number.
Octonion parse_octonion(const std::string& text);

}  // namespace octeig::cli
