#include "octeig/cli/json_io.hpp"

#include <fstream>
#include <sstream>

#include "octeig/error.hpp"
#include "octeig/examples.hpp"

namespace octeig::cli {

Json to_json(const Octonion& o) {
  Json j = Json::array();
  for (int q = 0; q < 8; ++q) j.push_back(o[q]);
  return j;
}

Json to_json(const OctVec3& v) { return {{"x", to_json(v.x)}, {"y", to_json(v.y)}, {"z", to_json(v.z)}}; }

Json to_json(const JordanMatrix& a) {
  return {{"p", a.p}, {"m", a.m}, {"n", a.n}, {"a", to_json(a.a)}, {"b", to_json(a.b)}, {"c", to_json(a.c)}};
}

Octonion octonion_from_json(const Json& j, const std::string& field) {
  if (j.is_number()) return Octonion(j.get<double>());
  if (!j.is_array() || j.size() != 8)
    throw ParseError("field '" + field + "': expected an array of 8 numbers");
  Octonion o;
  for (int q = 0; q < 8; ++q) {
    if (!j[q].is_number())
      throw ParseError("field '" + field + "[" + std::to_string(q) + "]': expected a number");
    o[q] = j[q].get<double>();
  }
  return o;
}

OctVec3 vec3_from_json(const Json& j, const std::string& field) {
  if (!j.is_object()) throw ParseError("field '" + field + "': expected an object with x, y, z");
  OctVec3 v;
  const char* names[3] = {"x", "y", "z"};
  for (int r = 0; r < 3; ++r) {
    if (!j.contains(names[r])) throw ParseError("field '" + field + "." + names[r] + "': missing");
    v[r] = octonion_from_json(j.at(names[r]), field + "." + names[r]);
  }
  return v;
}

namespace {

double number_field(const Json& j, const char* name, std::optional<double> fallback = std::nullopt) {
  if (!j.contains(name)) {
    if (fallback) return *fallback;
    throw ParseError(std::string("field '") + name + "': missing");
  }
  if (!j.at(name).is_number()) throw ParseError(std::string("field '") + name + "': expected a number");
  return j.at(name).get<double>();
}

}  // namespace

JordanMatrix jordan_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("document: expected a JSON object");
  JordanMatrix a;
  a.p = number_field(j, "p");
  a.m = number_field(j, "m");
  a.n = number_field(j, "n");
  for (const char* name : {"a", "b", "c"})
    if (!j.contains(name)) throw ParseError(std::string("field '") + name + "': missing");
  a.a = octonion_from_json(j.at("a"), "a");
  a.b = octonion_from_json(j.at("b"), "b");
  a.c = octonion_from_json(j.at("c"), "c");
  return a;
}

JordanMatrix example_matrix(int example, double p, double q, double theta) {
  switch (example) {
    case 1: return make_example1(p, q, theta).matrix;
    case 2: return make_example2(p, q).matrix;
    case 3: return make_example3(p, q).matrix;
    default: throw ParseError("field 'example': expected 1, 2 or 3, got " + std::to_string(example));
  }
}

MatrixFile parse_matrix_file(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                     ": malformed JSON");
  }
  if (!j.is_object()) throw ParseError("document: expected a JSON object");

  MatrixFile f;
  if (j.contains("example")) {
    if (!j.at("example").is_number_integer()) throw ParseError("field 'example': expected an integer");
    f.example = j.at("example").get<int>();
    f.p = number_field(j, "p", 0.0);
    f.q = number_field(j, "q", 1.0);
    f.theta = number_field(j, "theta", 0.0);
    f.matrix = example_matrix(*f.example, f.p, f.q, f.theta);
  } else {
    f.matrix = jordan_from_json(j);
  }
  return f;
}

MatrixFile load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_matrix_file(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Octonion parse_octonion(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error&) {
    throw ParseError("lambda: expected a number or an array of 8 numbers, got '" + text + "'");
  }
  return octonion_from_json(j, "lambda");
}

}  // namespace octeig::cli
