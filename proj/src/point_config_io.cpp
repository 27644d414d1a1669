#include "gramid/point_config_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace gramid {

namespace {

using nlohmann::json;

std::string at(const char* field, std::size_t i, std::size_t d) {
  return std::string(field) + "[" + std::to_string(i) + "][" + std::to_string(d) + "]";
}

Rational rational_coord(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(Integer(v.get<long long>()));
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::exception& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
  throw ConfigError(where + ": rational coordinates must be integers or \"p/q\" strings");
}

double real_coord(const json& v, const std::string& where) {
  if (!v.is_number()) throw ConfigError(where + ": float coordinates must be numbers");
  return v.get<double>();
}

std::complex<double> complex_coord(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw ConfigError(where + ": complex coordinates must be [re, im] number pairs");
  return {v[0].get<double>(), v[1].get<double>()};
}

template <typename Config, typename CoordFn>
PointConfig read_points(const json& points, int dimension, CoordFn coord) {
  Config cfg;
  cfg.dimension = dimension;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const json& row = points[i];
    if (!row.is_array())
      throw ConfigError("points[" + std::to_string(i) + "]: expected an array of coordinates");
    if (static_cast<int>(row.size()) != dimension)
      throw ConfigError("points[" + std::to_string(i) + "]: has " + std::to_string(row.size()) +
                        " coordinates, expected " + std::to_string(dimension));
    typename decltype(cfg.points)::value_type p;
    p.reserve(row.size());
    for (std::size_t d = 0; d < row.size(); ++d) p.push_back(coord(row[d], at("points", i, d)));
    cfg.points.push_back(std::move(p));
  }
  return cfg;
}

}  // namespace

PointConfig parse_point_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("top level must be a JSON object");

  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "dimension" && key != "scalar" && key != "points")
      throw ConfigError("unknown field '" + key + "'");
  }
  for (const char* key : {"dimension", "scalar", "points"})
    if (!doc.contains(key)) throw ConfigError(std::string("missing field '") + key + "'");

  if (!doc["dimension"].is_number_integer() || doc["dimension"].get<long long>() < 1)
    throw ConfigError("dimension: must be a positive integer");
  const int dimension = doc["dimension"].get<int>();

  if (!doc["scalar"].is_string())
    throw ConfigError("scalar: must be \"rational\", \"float\" or \"complex\"");
  const std::string scalar = doc["scalar"].get<std::string>();

  const json& points = doc["points"];
  if (!points.is_array() || points.empty())
    throw ConfigError("points: must be a non-empty array");

  if (scalar == "rational") return read_points<RationalConfig>(points, dimension, rational_coord);
  if (scalar == "float") return read_points<RealConfig>(points, dimension, real_coord);
  if (scalar == "complex") return read_points<ComplexConfig>(points, dimension, complex_coord);
  throw ConfigError("scalar: unknown kind '" + scalar + "'");
}

PointConfig load_point_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_point_config(buf.str());
}

}  // namespace gramid
