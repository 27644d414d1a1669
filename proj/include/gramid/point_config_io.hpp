#pragma once

#include "gramid/models.hpp"

#include <stdexcept>
#include <string>

namespace gramid {

// Raised for malformed or schema-violating point-configuration input;
// messages carry the offending field or byte position.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Parses the point-configuration JSON schema:
//
//   {
//     "dimension": <positive integer>,
//     "scalar":    "rational" | "float" | "complex",
//     "points":    [ [coord, ...], ... ]      // one row per point
//   }
//
// Rational coordinates are integers or strings "p/q"; float coordinates are
// numbers; complex coordinates are two-element [re, im] arrays. Unknown
// top-level fields are rejected.
PointConfig parse_point_config(const std::string& json_text);

PointConfig load_point_config(const std::string& path);

}  // namespace gramid
