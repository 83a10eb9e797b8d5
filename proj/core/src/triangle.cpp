#include "eightconic/triangle.hpp"

#include "eightconic/errors.hpp"

namespace eightconic {

BarycentricCoords TriangleFrame::vertex_barycentric(std::size_t i) const {
  Vec3 e{0, 0, 0};
  e.at(i) = 1;
  return HPoint(e, frame_);
}

bool all_sides_equal(const Rational& a2, const Rational& b2, const Rational& c2) {
  return a2 == b2 && b2 == c2;
}

bool TriangleFrame::is_equilateral() const { return all_sides_equal(a2(), b2(), c2()); }

TriangleFrame make_frame(const HPoint& v1, const HPoint& v2, const HPoint& v3) {
  for (const HPoint* v : {&v1, &v2, &v3}) {
    if (!v->frame().is_cartesian()) throw GeometryError(ErrorCode::WrongFrame, "frame vertices must be Cartesian");
    if (v->is_at_infinity()) throw GeometryError(ErrorCode::PointAtInfinity, "frame vertex at infinity");
  }
  if (v1 == v2 || v2 == v3 || v1 == v3) throw GeometryError(ErrorCode::Coincident, "frame vertices coincide");
  if (collinear(v1, v2, v3)) throw GeometryError(ErrorCode::Collinear, "frame vertices are collinear");

  const std::array<Point2, 3> pts = {v1.affine(), v2.affine(), v3.affine()};
  TriangleFrame f(Frame::barycentric(pts));
  auto dist2 = [](const Point2& p, const Point2& q) {
    const Rational dx = p.x - q.x;
    const Rational dy = p.y - q.y;
    return dx * dx + dy * dy;
  };
  f.side2_ = {dist2(pts[1], pts[2]), dist2(pts[2], pts[0]), dist2(pts[0], pts[1])};
  const Rational half(Integer(1), Integer(2));
  for (std::size_t i = 0; i < 3; ++i) {
    f.conway_[i] = (f.side2_[(i + 1) % 3] + f.side2_[(i + 2) % 3] - f.side2_[i]) * half;
  }
  f.s2_ = f.sa() * f.sb() + f.sb() * f.sc() + f.sc() * f.sa();
  if (f.s2_.sign() <= 0) throw GeometryError(ErrorCode::Collinear, "non-positive S^2");
  return f;
}

BarycentricCoords to_barycentric(const TriangleFrame& f, const HPoint& p) {
  if (!p.frame().is_cartesian()) throw GeometryError(ErrorCode::WrongFrame, "expected a Cartesian point");
  return change_frame(p, f.frame());
}

HPoint from_barycentric(const TriangleFrame& f, const BarycentricCoords& b) {
  require_same_frame(f.frame(), b.frame());
  return change_frame(b, Frame::cartesian());
}

BarycentricCoords reframe(const TriangleFrame& src, const TriangleFrame& dst,
                          const BarycentricCoords& b) {
  require_same_frame(src.frame(), b.frame());
  return change_frame(b, dst.frame());
}

HPoint circumcenter(const TriangleFrame& f) {
  const BarycentricCoords o(Vec3{f.a2() * f.sa(), f.b2() * f.sb(), f.c2() * f.sc()}, f.frame());
  return from_barycentric(f, o).normalized();
}

HPoint orthocenter(const TriangleFrame& f) {
  const BarycentricCoords h(Vec3{f.sb() * f.sc(), f.sc() * f.sa(), f.sa() * f.sb()}, f.frame());
  return from_barycentric(f, h).normalized();
}

HPoint centroid(const TriangleFrame& f) {
  return from_barycentric(f, HPoint(Vec3{1, 1, 1}, f.frame())).normalized();
}

HPoint euler_point(const TriangleFrame& f, const EulerParameter& lam) {
  const Point2 o = circumcenter(f).affine();
  const Point2 h = orthocenter(f).affine();
  if (o == h) throw GeometryError(ErrorCode::EquilateralFrame, "Euler line degenerates (O = H)");
  // den·O + num·(H − O), homogenized with w = den.
  const Rational& n = lam.num();
  const Rational& d = lam.den();
  return HPoint(d * o.x + n * (h.x - o.x), d * o.y + n * (h.y - o.y), d);
}

BarycentricCoords shinagawa_center(const TriangleFrame& f, const ShinagawaPair& s) {
  const Rational us2 = s.u * f.s2();
  return HPoint(Vec3{us2 + s.v * f.sb() * f.sc(), us2 + s.v * f.sc() * f.sa(),
                     us2 + s.v * f.sa() * f.sb()},
                f.frame());
}

bool on_sideline(const BarycentricCoords& b) {
  return b[0].is_zero() || b[1].is_zero() || b[2].is_zero();
}

BarycentricCoords isogonal_conjugate(const TriangleFrame& f, const BarycentricCoords& b) {
  require_same_frame(f.frame(), b.frame());
  if (on_sideline(b)) throw GeometryError(ErrorCode::OnSideline, "isogonal conjugate of a point on a sideline");
  const auto& c = b.coords();
  return HPoint(Vec3{f.a2() * c[1] * c[2], f.b2() * c[2] * c[0], f.c2() * c[0] * c[1]}, f.frame());
}

Rational circumcircle_value(const TriangleFrame& f, const BarycentricCoords& b) {
  require_same_frame(f.frame(), b.frame());
  const auto& c = b.coords();
  return f.a2() * c[1] * c[2] + f.b2() * c[2] * c[0] + f.c2() * c[0] * c[1];
}

}  // namespace eightconic
