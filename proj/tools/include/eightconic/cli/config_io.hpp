#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "eightconic/conic.hpp"
#include "eightconic/eightpoint.hpp"

namespace eightconic::cli {

using Json = nlohmann::ordered_json;

/// Malformed input; maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline const std::vector<std::string> kCheckNames = {"eight_point", "lemma_th4", "lemma1", "harmonic"};

struct ParsedConfig {
  CyclicConfig config;
  std::vector<std::string> checks;  // always starts with "eight_point"
};

Rational parse_rational(const Json& j, const std::string& where);

/// Accepts the documented config document. Points given as "xy" on a
/// circle other than the unit circle (optional "circle": {"center": [x, y],
/// "radius": r}) are moved onto the unit circle first. Throws InputError.
ParsedConfig parse_config(const Json& doc);
ParsedConfig parse_config_text(const std::string& text);
ParsedConfig load_config_file(const std::string& path);

/// Normalized echo; parse_config(config_to_json(c)) reproduces c.
Json config_to_json(const ParsedConfig& c);

Json rational_json(const Rational& r);
Json point_json(const HPoint& p);
Json matrix_json(const Mat3& m);
Json extended_json(const ExtendedRational& v);
Json parameter_json(const EulerSpec& spec);

}  // namespace eightconic::cli
