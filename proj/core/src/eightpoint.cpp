#include "eightconic/eightpoint.hpp"

#include "eightconic/errors.hpp"

namespace eightconic {

HPoint circle_point(const ExtendedRational& t) {
  if (is_infinite(t)) return HPoint(-1, 0, 1);
  const Rational& s = std::get<Rational>(t);
  const Rational s2 = s * s;
  return HPoint(Rational(1) - s2, Rational(2) * s, Rational(1) + s2).normalized();
}

CirclePoint CirclePoint::from_xy(const Point2& xy) {
  if (xy.x * xy.x + xy.y * xy.y != Rational(1)) {
    throw GeometryError(ErrorCode::InvalidArgument,
                        "point (" + xy.x.str() + ", " + xy.y.str() + ") is not on the unit circle");
  }
  return {xy};
}

HPoint CirclePoint::point() const {
  if (const auto* t = std::get_if<ExtendedRational>(&source)) return circle_point(*t);
  return HPoint::affine(std::get<Point2>(source));
}

EulerParameter to_lambda(const EulerSpec& spec) {
  if (const auto* lam = std::get_if<EulerParameter>(&spec)) return *lam;
  return shinagawa_to_lambda(std::get<ShinagawaPair>(spec));
}

std::array<std::size_t, 3> sub_triangle(std::size_t omitted) {
  switch (omitted) {
    case 0: return {1, 2, 3};
    case 1: return {0, 2, 3};
    case 2: return {0, 1, 3};
    case 3: return {0, 1, 2};
  }
  throw GeometryError(ErrorCode::InvalidArgument, "vertex index out of range");
}

bool DerivedConfig::all_ok() const {
  for (auto s : status)
    if (s != PointStatus::Ok) return false;
  return true;
}

namespace {

int orientation(const Point2& a, const Point2& b, const Point2& c) {
  return ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)).sign();
}

}  // namespace

DerivedConfig build_configuration(const CyclicConfig& cfg) {
  std::array<HPoint, 4> v = {cfg.vertex(0), cfg.vertex(1), cfg.vertex(2), cfg.vertex(3)};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (v[i] == v[j]) {
        throw GeometryError(ErrorCode::DegenerateQuadrilateral,
                            std::string(kVertexNames[j]) + " and " + kVertexNames[i] + " coincide");
      }

  if (cfg.strict_order) {
    const Point2 a = v[0].affine(), b = v[1].affine(), c = v[2].affine(), d = v[3].affine();
    if (orientation(a, c, b) * orientation(a, c, d) >= 0 ||
        orientation(b, d, a) * orientation(b, d, c) >= 0) {
      throw GeometryError(ErrorCode::NonConvexOrder, "A, B, C, D are not in cyclic order");
    }
  }

  const HPoint origin = HPoint::affine(0, 0);
  DerivedConfig out{v, {}, origin, {origin, origin, origin, origin},
                    {origin, origin, origin, origin}, {}, {}, {}, cfg.lambda()};
  out.frames.reserve(4);
  for (std::size_t x = 0; x < 4; ++x) {
    const auto idx = sub_triangle(x);
    out.frames.push_back(make_frame(v[idx[0]], v[idx[1]], v[idx[2]]));
    if (out.frames.back().is_equilateral()) {
      throw GeometryError(ErrorCode::EquilateralSubtriangle,
                          std::string("sub-triangle omitting ") + kVertexNames[x] + " is equilateral");
    }
  }

  out.circumcenter = circumcenter(out.abc());
  for (std::size_t x = 0; x < 4; ++x) {
    const TriangleFrame& f = out.frames[x];
    out.orthocenters[x] = orthocenter(f);
    out.euler_points[x] = euler_point(f, out.lambda);
    const BarycentricCoords p = to_barycentric(f, out.euler_points[x]);
    if (on_sideline(p)) {
      out.status[x] = PointStatus::IsogonalUndefined;
      continue;
    }
    const HPoint q = from_barycentric(f, isogonal_conjugate(f, p)).normalized();
    out.conjugates[x] = q;
    out.conjugates_abc[x] = change_frame(q, out.abc().frame()).display();
    out.status[x] = PointStatus::Ok;
  }
  return out;
}

namespace {

bool distinct_from(const std::vector<std::size_t>& chosen, const std::array<HPoint, 8>& pts,
                   std::size_t i) {
  for (auto c : chosen)
    if (pts[c] == pts[i]) return false;
  return true;
}

std::optional<Conic> try_fit(const std::array<HPoint, 8>& pts, const std::vector<std::size_t>& idx) {
  std::array<HPoint, 5> five = {pts[idx[0]], pts[idx[1]], pts[idx[2]], pts[idx[3]], pts[idx[4]]};
  try {
    return conic_through_five(std::span<const HPoint>(five));
  } catch (const GeometryError& e) {
    if (e.code() == ErrorCode::NotUnique || e.code() == ErrorCode::DuplicatePoint) return std::nullopt;
    throw;
  }
}

}  // namespace

VerificationReport eight_point_conic(const DerivedConfig& derived) {
  if (!derived.all_ok()) {
    std::string which;
    for (std::size_t x = 0; x < 4; ++x) {
      if (derived.status[x] != PointStatus::Ok) which += std::string(which.empty() ? "" : ", ") + "P_" + kVertexNames[x];
    }
    throw GeometryError(ErrorCode::IsogonalUndefined, which + " on a sideline of its triangle");
  }

  std::array<HPoint, 8> pts = {derived.vertices[0],     derived.vertices[1],
                               derived.vertices[2],     derived.vertices[3],
                               *derived.conjugates[0], *derived.conjugates[1],
                               *derived.conjugates[2], *derived.conjugates[3]};

  bool collapsed = false;
  for (std::size_t i = 4; i < 8; ++i)
    for (std::size_t j = 0; j < i; ++j) collapsed = collapsed || pts[i] == pts[j];

  std::vector<std::size_t> chosen = {0, 1, 2, 3};
  for (std::size_t i = 4; i < 8 && chosen.size() < 5; ++i) {
    if (distinct_from(chosen, pts, i)) chosen.push_back(i);
  }
  std::optional<Conic> fitted;
  if (chosen.size() == 5) fitted = try_fit(pts, chosen);

  // Fallback: first 5-subset, in lexicographic order, in general position.
  for (std::size_t mask = 0; !fitted && mask < (1u << 8); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != 5) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 8; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    fitted = try_fit(pts, idx);
    if (fitted) chosen = idx;
  }
  if (!fitted) throw GeometryError(ErrorCode::NoGeneralPositionFive, "no five of the eight points fix a conic");

  const Conic conic = fitted->display();
  std::array<Rational, 8> residuals;
  bool ok = true;
  for (std::size_t i = 0; i < 8; ++i) {
    residuals[i] = incidence(conic, pts[i]);
    ok = ok && residuals[i].is_zero();
  }
  return VerificationReport{conic, residuals, classify(conic), chosen, collapsed, ok, derived};
}

VerificationReport eight_point_conic(const CyclicConfig& cfg) {
  return eight_point_conic(build_configuration(cfg));
}

namespace {

std::array<Rational, 3> shinagawa_denominators(const TriangleFrame& abc, const ShinagawaPair& s) {
  const Rational us2 = s.u * abc.s2();
  std::array<Rational, 3> den = {us2 + s.v * abc.sb() * abc.sc(), us2 + s.v * abc.sa() * abc.sc(),
                                 us2 + s.v * abc.sa() * abc.sb()};
  for (const auto& d : den) {
    if (d.is_zero()) {
      throw GeometryError(ErrorCode::IsogonalUndefined,
                          "zero Shinagawa denominator: the center lies on a sideline");
    }
  }
  return den;
}

}  // namespace

BarycentricCoords shinagawa_conjugate(const TriangleFrame& abc, const ShinagawaPair& s) {
  const auto den = shinagawa_denominators(abc, s);
  return HPoint(Vec3{abc.a2() / den[0], abc.b2() / den[1], abc.c2() / den[2]}, abc.frame());
}

Conic phi_uv(const TriangleFrame& abc, const BarycentricCoords& d, const ShinagawaPair& s) {
  require_same_frame(abc.frame(), d.frame());
  int zeros = 0;
  for (const auto& c : d.coords()) zeros += c.is_zero() ? 1 : 0;
  if (zeros >= 2) throw GeometryError(ErrorCode::VertexInput, "D must not be a vertex of ABC");

  const auto den = shinagawa_denominators(abc, s);  // U_A, U_B, U_C
  const Rational& p = d[0];
  const Rational& q = d[1];
  const Rational& r = d[2];
  const Rational& a2 = abc.a2();
  const Rational& b2 = abc.b2();
  const Rational& c2 = abc.c2();
  const Rational yz = a2 * p * (c2 * q * den[1] - b2 * r * den[2]);
  const Rational zx = b2 * q * (a2 * r * den[2] - c2 * p * den[0]);
  const Rational xy = c2 * r * (b2 * p * den[0] - a2 * q * den[1]);
  if (yz.is_zero() && zx.is_zero() && xy.is_zero()) {
    throw GeometryError(ErrorCode::DegenerateAllZero, "all conic coefficients vanish");
  }
  return Conic::from_coefficients({0, 0, 0, yz, zx, xy}, abc.frame());
}

}  // namespace eightconic
