#include "eightconic/cli/config_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "eightconic/errors.hpp"

namespace eightconic::cli {

Rational parse_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw InputError(where + ": expected a rational string such as \"3/4\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const GeometryError& e) {
    throw InputError(where + ": " + e.what());
  }
}

namespace {

ExtendedRational parse_extended_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_extended(j.get<std::string>());
    } catch (const GeometryError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  return parse_rational(j, where);
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

Point2 parse_pair(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw InputError(where + ": expected two rationals");
  return {parse_rational(j[0], where + "[0]"), parse_rational(j[1], where + "[1]")};
}

struct CircleTransform {
  Point2 center{0, 0};
  Rational radius = 1;
};

CircleTransform parse_circle(const Json& doc) {
  CircleTransform c;
  if (!doc.contains("circle")) return c;
  const Json& j = doc.at("circle");
  if (j.contains("center")) c.center = parse_pair(j.at("center"), "circle.center");
  if (j.contains("radius")) c.radius = parse_rational(j.at("radius"), "circle.radius");
  if (c.radius.sign() <= 0) throw InputError("circle.radius: must be positive");
  return c;
}

CirclePoint parse_point(const Json& j, const std::string& where, const CircleTransform& circle) {
  if (!j.is_object()) throw InputError(where + ": expected an object with \"t\" or \"xy\"");
  if (j.contains("t") == j.contains("xy")) throw InputError(where + ": give exactly one of \"t\" and \"xy\"");
  if (j.contains("t")) return CirclePoint::from_parameter(parse_extended_json(j.at("t"), where + ".t"));
  const Point2 raw = parse_pair(j.at("xy"), where + ".xy");
  const Point2 xy{(raw.x - circle.center.x) / circle.radius, (raw.y - circle.center.y) / circle.radius};
  try {
    return CirclePoint::from_xy(xy);
  } catch (const GeometryError& e) {
    throw InputError(where + ".xy: " + e.what());
  }
}

EulerSpec parse_parameter(const Json& j) {
  if (!j.is_object() || j.contains("lambda") == j.contains("shinagawa")) {
    throw InputError("parameter: give exactly one of \"lambda\" and \"shinagawa\"");
  }
  if (j.contains("lambda")) return EulerParameter::from_extended(parse_extended_json(j.at("lambda"), "parameter.lambda"));
  const Point2 uv = parse_pair(j.at("shinagawa"), "parameter.shinagawa");
  if (uv.x.is_zero() && uv.y.is_zero()) throw InputError("parameter.shinagawa: (0,0) is not a pair");
  return ShinagawaPair(uv.x, uv.y);
}

}  // namespace

ParsedConfig parse_config(const Json& doc) {
  if (!doc.is_object()) throw InputError("config: expected a JSON object");
  const CircleTransform circle = parse_circle(doc);
  const Json& pts = require(doc, "points", "config");
  ParsedConfig out{CyclicConfig{{CirclePoint::from_parameter(Rational(0)), CirclePoint::from_parameter(Rational(0)),
                                 CirclePoint::from_parameter(Rational(0)), CirclePoint::from_parameter(Rational(0))},
                                EulerParameter(0)},
                   {"eight_point"}};
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string where = std::string("points.") + kVertexNames[i];
    out.config.points[i] = parse_point(require(pts, kVertexNames[i], "points"), where, circle);
  }
  out.config.parameter = parse_parameter(require(doc, "parameter", "config"));
  if (doc.contains("strict_order")) {
    if (!doc.at("strict_order").is_boolean()) throw InputError("strict_order: expected a boolean");
    out.config.strict_order = doc.at("strict_order").get<bool>();
  }
  if (doc.contains("checks")) {
    const Json& checks = doc.at("checks");
    if (!checks.is_array()) throw InputError("checks: expected a list");
    for (const auto& c : checks) {
      if (!c.is_string()) throw InputError("checks: expected strings");
      const std::string name = c.get<std::string>();
      if (std::find(kCheckNames.begin(), kCheckNames.end(), name) == kCheckNames.end()) {
        throw InputError("checks: unknown check \"" + name + "\"");
      }
      if (std::find(out.checks.begin(), out.checks.end(), name) == out.checks.end()) out.checks.push_back(name);
    }
  }
  return out;
}

ParsedConfig parse_config_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("config: ") + e.what());
  }
  return parse_config(doc);
}

ParsedConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

Json rational_json(const Rational& r) { return r.str(); }

Json extended_json(const ExtendedRational& v) { return to_string(v); }

Json point_json(const HPoint& p) {
  const HPoint d = p.normalized();
  return Json::array({d[0].str(), d[1].str(), d[2].str()});
}

Json matrix_json(const Mat3& m) {
  Json rows = Json::array();
  for (const auto& row : m) rows.push_back(Json::array({row[0].str(), row[1].str(), row[2].str()}));
  return rows;
}

Json parameter_json(const EulerSpec& spec) {
  if (const auto* lam = std::get_if<EulerParameter>(&spec)) return Json{{"lambda", lam->str()}};
  const auto& s = std::get<ShinagawaPair>(spec);
  return Json{{"shinagawa", Json::array({s.u.str(), s.v.str()})}};
}

Json config_to_json(const ParsedConfig& c) {
  Json pts = Json::object();
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& src = c.config.points[i].source;
    if (const auto* t = std::get_if<ExtendedRational>(&src)) {
      pts[kVertexNames[i]] = Json{{"t", to_string(*t)}};
    } else {
      const auto& xy = std::get<Point2>(src);
      pts[kVertexNames[i]] = Json{{"xy", Json::array({xy.x.str(), xy.y.str()})}};
    }
  }
  Json out{{"points", pts}, {"parameter", parameter_json(c.config.parameter)}};
  if (c.config.strict_order) out["strict_order"] = true;
  out["checks"] = c.checks;
  return out;
}

}  // namespace eightconic::cli
