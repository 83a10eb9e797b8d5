#include <doctest.h>

#include "eightconic/conic.hpp"
#include "eightconic/eightpoint.hpp"
#include "eightconic/errors.hpp"
#include "support/generators.hpp"

using namespace eightconic;
using eightconic::testing::Gen;
using eightconic::testing::rational_rotation;
using eightconic::testing::translation;

namespace {

Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.code();
  }
  FAIL("expected a GeometryError");
  return ErrorCode::InvalidArgument;
}

std::vector<Rational> monomials(const HPoint& p) {
  const Rational &x = p[0], &y = p[1], &z = p[2];
  return {x * x, y * y, z * z, y * z, z * x, x * y};
}

/// Independent oracle: the coefficient of each monomial is the signed 5x5
/// minor of the incidence matrix with that column removed.
Conic conic_by_minors(const std::array<HPoint, 5>& pts) {
  ConicCoefficients k;
  for (std::size_t col = 0; col < 6; ++col) {
    Matrix minor(5, 5);
    for (std::size_t r = 0; r < 5; ++r) {
      const auto row = monomials(pts[r]);
      for (std::size_t c = 0, out = 0; c < 6; ++c) {
        if (c != col) minor(r, out++) = row[c];
      }
    }
    k[col] = (col % 2 ? Rational(-1) : Rational(1)) * determinant(minor);
  }
  return Conic::from_coefficients(k, pts[0].frame());
}

Conic conic_of(long xx, long yy, long zz, long yz, long zx, long xy) {
  return Conic::from_coefficients({xx, yy, zz, yz, zx, xy});
}

TriangleFrame unit_circle_frame(Gen& g) {
  for (;;) {
    const Rational t1 = g.circle_t(), t2 = g.circle_t(), t3 = g.circle_t();
    if (t1 == t2 || t2 == t3 || t1 == t3) continue;
    return make_frame(circle_point(t1), circle_point(t2), circle_point(t3));
  }
}

/// Conjugates a Cartesian conic by the point map p -> t·p.
Conic transform(const Conic& c, const Mat3& t) {
  const Mat3 inv = adjugate(t);
  return Conic(multiply(transpose(inv), multiply(c.matrix(), inv)));
}

BarycentricCoords bary(const TriangleFrame& f, const Vec3& v) { return HPoint(v, f.frame()); }

}  // namespace

TEST_CASE("conic_through_five: unit circle samples") {
  std::array<HPoint, 5> pts{circle_point(Rational(0)), circle_point(Rational(1)), circle_point(Infinity{}),
                            circle_point(q(1, 3)), circle_point(Rational(-5))};
  const Conic c = conic_through_five(pts);
  CHECK(conics_equal(c, unit_circle()));
  CHECK(classify(c) == ConicClass::Circle);
}

TEST_CASE("conic_through_five: vertices, fourth circle point and orthocenter give a rectangular hyperbola") {
  Gen g(31);
  for (int i = 0; i < 50; ++i) {
    const TriangleFrame f = unit_circle_frame(g);
    const HPoint d = circle_point(g.circle_t());
    const HPoint h = orthocenter(f);
    if (d == f.vertex(0) || d == f.vertex(1) || d == f.vertex(2) || d == h) continue;
    const HPoint pts[] = {f.vertex(0), f.vertex(1), f.vertex(2), d, h};
    bool four_collinear = false;
    for (int skip = 0; skip < 5; ++skip) {
      std::vector<HPoint> rest;
      for (int k = 0; k < 5; ++k)
        if (k != skip) rest.push_back(pts[k]);
      four_collinear = four_collinear || (collinear(rest[0], rest[1], rest[2]) && collinear(rest[0], rest[1], rest[3]));
    }
    if (four_collinear) continue;
    const Conic c = conic_through_five(pts);
    const ConicClass cls = classify(c);
    CHECK((cls == ConicClass::RectangularHyperbola || cls == ConicClass::DegenerateRank2));
    CHECK((c.matrix()[0][0] + c.matrix()[1][1]).is_zero());
  }
}

TEST_CASE("conic_through_five: three collinear points give a line pair") {
  const Conic c = conic_through_five(HPoint::affine(0, 0), HPoint::affine(1, 1), HPoint::affine(2, 2),
                                     HPoint::affine(1, -3), HPoint::affine(4, 0));
  CHECK(det(c.matrix()).is_zero());
  CHECK(rank(c.matrix()) == 2);
  CHECK(classify(c) == ConicClass::DegenerateRank2);
  const HLine diag({1, -1, 0});
  // The line y = x is a component: every point on it is incident.
  for (long t = -3; t <= 3; ++t) CHECK(incidence(c, HPoint::affine(t, t)).is_zero());
  CHECK(diag.contains(singular_point(c)));
}

TEST_CASE("conic_through_five: rejected inputs") {
  CHECK(code_of([] {
          conic_through_five(HPoint::affine(0, 0), HPoint::affine(1, 0), HPoint::affine(2, 0),
                             HPoint::affine(3, 0), HPoint::affine(1, 1));
        }) == ErrorCode::NotUnique);
  CHECK(code_of([] {
          conic_through_five(HPoint::affine(0, 0), HPoint(2, 4, 2), HPoint::affine(1, 2), HPoint::affine(3, 0),
                             HPoint::affine(1, 1));
        }) == ErrorCode::DuplicatePoint);
  const TriangleFrame f = make_frame(HPoint::affine(0, 0), HPoint::affine(1, 0), HPoint::affine(0, 1));
  CHECK(code_of([&] {
          conic_through_five(HPoint::affine(0, 0), HPoint::affine(1, 0), HPoint::affine(2, 1), HPoint::affine(3, 5),
                             bary(f, {1, 1, 1}));
        }) == ErrorCode::FrameMismatch);
}

TEST_CASE("conic_through_five: property, zero incidence and agreement with the minor oracle") {
  Gen g(32);
  int checked = 0;
  while (checked < 300) {
    std::array<HPoint, 5> pts{g.point(9), g.point(9), g.point(9), g.point(9), g.point(9)};
    try {
      const Conic c = conic_through_five(pts);
      for (const auto& p : pts) CHECK(incidence(c, p).is_zero());
      CHECK(conics_equal(c, conic_by_minors(pts)));
      ++checked;
    } catch (const GeometryError& e) {
      CHECK((e.code() == ErrorCode::DuplicatePoint || e.code() == ErrorCode::NotUnique));
    }
  }
}

TEST_CASE("circumconic_formula: examples") {
  const TriangleFrame f = make_frame(HPoint::affine(0, 0), HPoint::affine(7, 0), HPoint::affine(2, 5));
  const BarycentricCoords d = bary(f, {1, 1, 1});
  const BarycentricCoords x = bary(f, {f.a2(), f.b2(), f.c2()});
  const Conic c = circumconic_formula(f, d, x);
  CHECK(conics_equal(c, conic_through_five(f.vertex_barycentric(0), f.vertex_barycentric(1),
                                           f.vertex_barycentric(2), d, x)));
  CHECK(incidence(c, d).is_zero());
  CHECK(incidence(c, x).is_zero());

  // X on line AD: the conic splits off that line.
  const BarycentricCoords on_ad = bary(f, {3, 1, 1});
  const Conic split = circumconic_formula(f, d, on_ad);
  CHECK(rank(split.matrix()) == 2);
  const HLine ad = line_through(f.vertex_barycentric(0), d);
  for (long s = -2; s <= 2; ++s) {
    CHECK(incidence(split, HPoint(add(f.vertex_barycentric(0).coords(), scale(d.coords(), s)), f.frame())).is_zero());
  }
  CHECK(ad.contains(on_ad));

  CHECK(code_of([&] { circumconic_formula(f, f.vertex_barycentric(1), x); }) == ErrorCode::VertexInput);
  CHECK(code_of([&] { circumconic_formula(f, d, d); }) == ErrorCode::DegenerateAllZero);
}

TEST_CASE("circumconic_formula: property, equals the five-point fit") {
  Gen g(33);
  int checked = 0;
  while (checked < 500) {
    const TriangleFrame f = g.frame(9);
    const BarycentricCoords d = bary(f, g.nonzero_vec3(9));
    const BarycentricCoords x = bary(f, g.nonzero_vec3(9));
    try {
      const Conic formula = circumconic_formula(f, d, x);
      const Conic fit = conic_through_five(f.vertex_barycentric(0), f.vertex_barycentric(1),
                                           f.vertex_barycentric(2), d, x);
      CHECK(conics_equal(formula, fit));
      ++checked;
    } catch (const GeometryError& e) {
      CHECK((e.code() == ErrorCode::VertexInput || e.code() == ErrorCode::DegenerateAllZero ||
             e.code() == ErrorCode::DuplicatePoint || e.code() == ErrorCode::NotUnique));
    }
  }
}

TEST_CASE("incidence: examples") {
  const TriangleFrame f = make_frame(HPoint::affine(0, 0), HPoint::affine(7, 0), HPoint::affine(2, 5));
  const Conic circ = circumcircle_barycentric(f);
  for (std::size_t i = 0; i < 3; ++i) CHECK(incidence(circ, f.vertex_barycentric(i)).is_zero());
  CHECK(incidence(unit_circle(), HPoint::affine(0, 0)) == -1);
  const Conic fit = conic_through_five(HPoint::affine(1, 2), HPoint::affine(-3, 1), HPoint::affine(4, 4),
                                       HPoint::affine(0, -2), HPoint::affine(5, -1));
  CHECK(incidence(fit, HPoint::affine(5, -1)).is_zero());
  CHECK_FALSE(incidence(fit, HPoint::affine(5, q(-99, 100))).is_zero());
}

TEST_CASE("conic_change_frame: examples") {
  const Conic c = conic_of(2, -3, 1, 4, 0, 7);
  CHECK(conic_change_frame(c, Frame::cartesian()).matrix() == c.matrix());

  Gen g(34);
  const TriangleFrame f = g.frame();
  const Conic bary_circ = circumcircle_barycentric(f);
  const Conic cart = conic_change_frame(bary_circ, Frame::cartesian());
  const Point2 o = circumcenter(f).affine();
  const Rational r2 = squared_distance(circumcenter(f), f.vertex(0));
  const Conic expected(Mat3{{{1, 0, -o.x}, {0, 1, -o.y}, {-o.x, -o.y, o.x * o.x + o.y * o.y - r2}}});
  CHECK(conics_equal(cart, expected));
  CHECK(classify(cart) == ConicClass::Circle);

  // Corresponding points have incidence values in one fixed ratio.
  std::optional<Rational> ratio;
  for (int i = 0; i < 6; ++i) {
    const HPoint p = g.finite_point();
    const Rational vc = incidence(cart, p);
    const Rational vb = incidence(bary_circ, to_barycentric(f, p));
    CHECK(vc.is_zero() == vb.is_zero());
    if (vc.is_zero()) continue;
    if (!ratio) ratio = vb / vc;
    CHECK(vb / vc == *ratio);
  }
  CHECK(conics_equal(conic_change_frame(cart, f.frame()), bary_circ));
}

TEST_CASE("classify: examples") {
  CHECK(classify(unit_circle()) == ConicClass::Circle);
  CHECK(classify(conic_of(0, 0, -1, 0, 0, 1)) == ConicClass::RectangularHyperbola);  // xy = w²
  CHECK(classify(conic_of(1, 0, 0, -1, 0, 0)) == ConicClass::Parabola);             // x² = wy
  CHECK(classify(conic_of(1, 4, -1, 0, 0, 0)) == ConicClass::Ellipse);
  CHECK(classify(conic_of(1, -4, -1, 0, 0, 0)) == ConicClass::Hyperbola);
  CHECK(classify(conic_of(1, 0, 0, 0, 0, 0)) == ConicClass::DegenerateRank1);
  CHECK(classify(conic_of(1, -1, 0, 0, 0, 0)) == ConicClass::DegenerateRank2);
  const TriangleFrame f = make_frame(HPoint::affine(0, 0), HPoint::affine(1, 0), HPoint::affine(0, 1));
  CHECK(code_of([&] { classify(circumcircle_barycentric(f)); }) == ErrorCode::WrongFrame);
}

TEST_CASE("classify: property, invariant under rational rotations and translations") {
  Gen g(35);
  for (int i = 0; i < 300; ++i) {
    const Conic c = Conic::from_coefficients(
        {g.rational(9), g.rational(9), g.rational(9), g.rational(9), g.rational(9), g.rational(9)});
    const Mat3 motion = multiply(translation(g.rational(), g.rational()), rational_rotation(g.rational()));
    const Conic moved = transform(c, motion);
    CHECK(classify(moved) == classify(c));
    const Rational trace = c.matrix()[0][0] + c.matrix()[1][1];
    CHECK((moved.matrix()[0][0] + moved.matrix()[1][1]).is_zero() == trace.is_zero());
    // Incidence is carried along with the points.
    const HPoint p = g.point();
    CHECK(incidence(moved, HPoint(multiply(motion, p.coords()))).is_zero() == incidence(c, p).is_zero());
  }
}

TEST_CASE("conic_center: examples") {
  CHECK(conic_center(unit_circle()) == HPoint::affine(0, 0));
  // (x − 3)² + (y + 1/2)² = 4
  const Conic moved(Mat3{{{1, 0, -3}, {0, 1, q(1, 2)}, {-3, q(1, 2), Rational(9) + q(1, 4) - 4}}});
  CHECK(conic_center(moved) == HPoint::affine(3, q(-1, 2)));
  CHECK(conic_center(conic_of(1, 0, 0, -1, 0, 0)).is_at_infinity());
  CHECK(code_of([] { conic_center(conic_of(1, -1, 0, 0, 0, 0)); }) == ErrorCode::Degenerate);
}

TEST_CASE("conic_center: property, central symmetry") {
  Gen g(36);
  for (int i = 0; i < 300; ++i) {
    const Conic c = Conic::from_coefficients(
        {g.rational(9), g.rational(9), g.rational(9), g.rational(9), g.rational(9), g.rational(9)});
    if (c.is_degenerate()) continue;
    const HPoint center = conic_center(c);
    if (center.is_at_infinity()) continue;
    const Point2 o = center.affine();
    const Rational vx = g.rational(), vy = g.rational();
    CHECK(incidence(c, HPoint::affine(o.x + vx, o.y + vy)) == incidence(c, HPoint::affine(o.x - vx, o.y - vy)));
    CHECK(dot(center.coords(), multiply(c.matrix(), Vec3{vx, vy, 0})).is_zero());
  }
}

TEST_CASE("second_intersection: examples") {
  const Conic circle = unit_circle();
  CHECK(second_intersection(circle, HLine({0, 1, 0}), HPoint::affine(-1, 0)) == HPoint::affine(1, 0));
  CHECK(second_intersection(circle, HLine({1, 0, -1}), HPoint::affine(1, 0)) == HPoint::affine(1, 0));
  const HPoint p = circle_point(q(2, 7));
  const HLine chord = line_through(p, HPoint::affine(q(1, 3), q(-1, 5)));
  const HPoint other = second_intersection(circle, chord, p);
  CHECK(incidence(circle, other).is_zero());
  CHECK(chord.contains(other));
  CHECK(code_of([] { second_intersection(conic_of(0, 1, 0, 0, 0, 0), HLine({0, 1, 0}), HPoint::affine(0, 0)); }) ==
        ErrorCode::LineOnConic);
}

TEST_CASE("second_intersection: property, involution on chords") {
  Gen g(37);
  for (int i = 0; i < 300; ++i) {
    std::array<HPoint, 5> pts{g.point(9), g.point(9), g.point(9), g.point(9), g.point(9)};
    Conic c = unit_circle();
    try {
      c = conic_through_five(pts);
    } catch (const GeometryError&) {
      continue;
    }
    const HPoint other = g.point();
    if (other == pts[0]) continue;
    const HLine l = line_through(pts[0], other);
    try {
      const HPoint s = second_intersection(c, l, pts[0]);
      CHECK(incidence(c, s).is_zero());
      CHECK(second_intersection(c, l, s) == pts[0]);
    } catch (const GeometryError& e) {
      CHECK(e.code() == ErrorCode::LineOnConic);
    }
  }
}

TEST_CASE("isogonal_image_of_line: Euler line goes to a circumconic through O and H") {
  Gen g(38);
  int checked = 0;
  while (checked < 100) {
    const TriangleFrame f = g.frame(12);
    const BarycentricCoords o = to_barycentric(f, circumcenter(f));
    const BarycentricCoords h = to_barycentric(f, orthocenter(f));
    if (o == h || on_sideline(o) || on_sideline(h)) continue;
    const HLine euler = line_through(o, h);
    try {
      const Conic j = isogonal_image_of_line(f, euler);
      for (std::size_t i = 0; i < 3; ++i) CHECK(incidence(j, f.vertex_barycentric(i)).is_zero());
      CHECK(incidence(j, o).is_zero());
      CHECK(incidence(j, h).is_zero());
      CHECK(classify(conic_change_frame(j, Frame::cartesian())) == ConicClass::RectangularHyperbola);
      ++checked;
    } catch (const GeometryError& e) {
      CHECK(e.code() == ErrorCode::ThroughVertex);
    }
  }
}

TEST_CASE("isogonal_image_of_line: examples and errors") {
  // Perpendicular bisector of BC taken in the frame BCD.
  const HPoint b = circle_point(Rational(3)), c = circle_point(q(-2, 5)), d = circle_point(q(-7, 4));
  const TriangleFrame bcd = make_frame(b, c, d);
  const HPoint m = midpoint(b, c);
  const Point2 bc{c.affine().x - b.affine().x, c.affine().y - b.affine().y};
  const HLine bisector = line_through(m, HPoint(-bc.y, bc.x, 0));
  const Conic h1 = isogonal_image_of_line(bcd, change_frame(bisector, bcd.frame()));
  const Conic h1_cart = conic_change_frame(h1, Frame::cartesian());
  CHECK(classify(h1_cart) == ConicClass::RectangularHyperbola);
  CHECK(conic_center(h1_cart) == m);

  const TriangleFrame f = make_frame(HPoint::affine(0, 0), HPoint::affine(7, 0), HPoint::affine(2, 5));
  CHECK(code_of([&] { isogonal_image_of_line(f, HLine({0, 1, -1}, f.frame())); }) == ErrorCode::ThroughVertex);
  CHECK(code_of([&] { isogonal_image_of_line(f, HLine({1, 1, 1}, f.frame())); }) == ErrorCode::InvalidArgument);

  // Exact line image agrees with the sampled conic.
  const HLine l({2, -3, 5}, f.frame());
  CHECK(isogonal_line_of_circumconic(f, isogonal_image_of_line(f, l)) == l);
}

TEST_CASE("isogonal_image_of_conic_bc: examples") {
  const std::array<HPoint, 4> v{circle_point(q(1, 2)), circle_point(Rational(3)), circle_point(q(-2, 5)),
                                circle_point(q(-7, 4))};
  const TriangleFrame bcd = make_frame(v[1], v[2], v[3]);
  const TriangleFrame abc = make_frame(v[0], v[1], v[2]);
  const HPoint m = midpoint(v[1], v[2]);
  const Point2 bc{v[2].affine().x - v[1].affine().x, v[2].affine().y - v[1].affine().y};
  const HLine bisector = line_through(m, HPoint(-bc.y, bc.x, 0));
  const Conic h1 = conic_change_frame(isogonal_image_of_line(bcd, change_frame(bisector, bcd.frame())), abc.frame());

  // The order of vertices in abc is (A, B, C), so B, C are the second and third.
  const Conic h2 = isogonal_image_of_conic_bc(abc, h1);
  CHECK(incidence(h2, abc.vertex_barycentric(1)).is_zero());
  CHECK(incidence(h2, abc.vertex_barycentric(2)).is_zero());
  const Conic h2_cart = conic_change_frame(h2, Frame::cartesian());
  CHECK(classify(h2_cart) == ConicClass::RectangularHyperbola);
  CHECK(conic_center(h2_cart) == m);

  // The circumcircle passes through A as well; this input is rejected.
  CHECK(code_of([&] { isogonal_image_of_conic_bc(abc, circumcircle_barycentric(abc)); }) ==
        ErrorCode::PassesThroughA);
  const Conic not_bc = circumconic_formula(abc, bary(abc, {1, 1, 1}), bary(abc, {1, 2, 3}));
  CHECK(code_of([&] { isogonal_image_of_conic_bc(abc, not_bc); }) == ErrorCode::PassesThroughA);
  const Conic no_vertex(identity3(), abc.frame());
  CHECK(code_of([&] { isogonal_image_of_conic_bc(abc, no_vertex); }) == ErrorCode::NotThroughBC);
}

TEST_CASE("conics_equal: examples") {
  const Conic c = conic_of(2, -3, 1, 4, 0, 7);
  CHECK(conics_equal(c, conic_of(14, -21, 7, 28, 0, 49)));
  const Conic moved(Mat3{{{1, 0, -1}, {0, 1, 0}, {-1, 0, 0}}});
  CHECK_FALSE(conics_equal(unit_circle(), moved));
  const TriangleFrame f = make_frame(HPoint::affine(0, 0), HPoint::affine(1, 0), HPoint::affine(0, 1));
  CHECK(code_of([&] { conics_equal(c, circumcircle_barycentric(f)); }) == ErrorCode::FrameMismatch);
}
