#include "eightconic/catalog.hpp"

#include <istream>
#include <sstream>

#include "eightconic/errors.hpp"

namespace eightconic {

HPoint construct_center(const TriangleFrame& f, CenterDefinition def) {
  switch (def) {
    case CenterDefinition::Centroid: {
      const auto& v = f.vertices();
      return HPoint::affine((v[0].x + v[1].x + v[2].x) / 3, (v[0].y + v[1].y + v[2].y) / 3);
    }
    case CenterDefinition::Circumcenter: return circumcenter(f);
    case CenterDefinition::Orthocenter: return orthocenter(f);
    case CenterDefinition::NinePointCenter: return midpoint(circumcenter(f), orthocenter(f));
    case CenterDefinition::DeLongchamps: {
      const Point2 o = circumcenter(f).affine();
      const Point2 h = orthocenter(f).affine();
      return HPoint::affine(Rational(2) * o.x - h.x, Rational(2) * o.y - h.y);
    }
    case CenterDefinition::EulerInfinity: {
      const Point2 o = circumcenter(f).affine();
      const Point2 h = orthocenter(f).affine();
      return HPoint(h.x - o.x, h.y - o.y, 0);
    }
    case CenterDefinition::None: break;
  }
  throw GeometryError(ErrorCode::InvalidArgument, "center has no construction");
}

EulerParameter solve_euler_parameter(const TriangleFrame& f, const HPoint& p) {
  const Point2 o = circumcenter(f).affine();
  const Point2 h = orthocenter(f).affine();
  if (o == h) throw GeometryError(ErrorCode::EquilateralFrame, "Euler line degenerates (O = H)");
  // p ~ (den − num)·O + num·H with w = den.
  const Rational& w = p[2];
  const std::array<Rational, 2> dir = {h.x - o.x, h.y - o.y};
  const std::array<Rational, 2> off = {p[0] - w * o.x, p[1] - w * o.y};
  const std::size_t i = dir[0].is_zero() ? 1 : 0;
  const Rational num = off[i] / dir[i];
  const std::size_t j = 1 - i;
  if (off[j] != num * dir[j]) throw GeometryError(ErrorCode::NotOnEulerLine, "point is off the Euler line");
  return EulerParameter(num, w);
}

namespace {

struct BuiltinCenter {
  const char* name;
  const char* definition;
  CenterDefinition construction;
};

constexpr std::array<BuiltinCenter, 6> kBuiltins = {{
    {"X2", "centroid", CenterDefinition::Centroid},
    {"X3", "circumcenter", CenterDefinition::Circumcenter},
    {"X4", "orthocenter", CenterDefinition::Orthocenter},
    {"X5", "nine-point center (midpoint of OH)", CenterDefinition::NinePointCenter},
    {"X20", "de Longchamps point (reflection of H in O)", CenterDefinition::DeLongchamps},
    {"X30", "Euler infinity point", CenterDefinition::EulerInfinity},
}};

// Scalene, acute and non-right, with O != H.
TriangleFrame reference_triangle() {
  return make_frame(HPoint::affine(0, 0), HPoint::affine(7, 0), HPoint::affine(2, 5));
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<CatalogEntry> catalog_entries() {
  const TriangleFrame ref = reference_triangle();
  std::vector<CatalogEntry> out;
  for (const auto& b : kBuiltins) {
    const EulerParameter lam = solve_euler_parameter(ref, construct_center(ref, b.construction));
    out.push_back({b.name, b.definition, lambda_to_shinagawa(lam), b.construction, std::nullopt});
  }
  return out;
}

std::vector<CatalogEntry> load_extended_catalog(std::istream& in) {
  const auto builtins = catalog_entries();
  std::vector<CatalogEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;

    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (fields.size() < 3 || fields.size() > 4 || fields[0].empty()) {
      throw CatalogFormatError("line " + std::to_string(lineno) + ": expected name,u,v[,lambda]");
    }
    try {
      CatalogEntry e{fields[0], "user-supplied", ShinagawaPair(Rational::parse(fields[1]), Rational::parse(fields[2])),
                     CenterDefinition::None, std::nullopt};
      if (fields.size() == 4) e.reference_lambda = EulerParameter::from_extended(parse_extended(fields[3]));
      for (const auto& b : builtins) {
        if (b.name == e.name) {
          e.construction = b.construction;
          e.definition = b.definition;
        }
      }
      out.push_back(std::move(e));
    } catch (const GeometryError& err) {
      throw CatalogFormatError("line " + std::to_string(lineno) + ": " + err.what());
    }
  }
  return out;
}

std::array<CirclePoint, 4> reference_quadrilateral() {
  return {CirclePoint::from_parameter(Rational(Integer(1), Integer(2))),
          CirclePoint::from_parameter(Rational(3)),
          CirclePoint::from_parameter(Rational(Integer(-2), Integer(5))),
          CirclePoint::from_parameter(Rational(Integer(-7), Integer(4)))};
}

CatalogReport catalog_check(const std::array<CirclePoint, 4>& base, const CatalogEntry& entry) {
  CatalogReport report{entry, shinagawa_to_lambda(entry.pair), std::nullopt, {}, "", false};
  const CyclicConfig cfg{base, entry.pair};
  try {
    report.eight_point = eight_point_conic(cfg);
    bool ok = report.eight_point->ok;

    if (entry.construction != CenterDefinition::None || entry.reference_lambda) {
      const auto& derived = report.eight_point->derived;
      for (std::size_t x = 0; x < 4; ++x) {
        const TriangleFrame& f = derived.frames[x];
        const HPoint p = entry.construction != CenterDefinition::None
                             ? construct_center(f, entry.construction)
                             : euler_point(f, *entry.reference_lambda);
        const HPoint q = from_barycentric(f, isogonal_conjugate(f, to_barycentric(f, p)));
        report.reference_residuals.push_back(incidence(report.eight_point->conic, q));
        ok = ok && report.reference_residuals.back().is_zero();
      }
    }
    report.ok = ok;
    report.status = ok ? "ok" : "fail";
  } catch (const GeometryError& e) {
    report.status = std::string(to_string(e.code()));
  }
  return report;
}

}  // namespace eightconic
