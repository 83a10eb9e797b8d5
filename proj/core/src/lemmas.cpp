#include "eightconic/lemmas.hpp"

#include "eightconic/errors.hpp"

namespace eightconic {

HPoint fourth_circumcircle_point(const TriangleFrame& f, const Conic& circumconic_bary) {
  // The circumcircle maps to the line at infinity and the circumconic to a
  // line L, so the fourth common point is the conjugate of L ∩ ℓ∞.
  const HLine l = isogonal_line_of_circumconic(f, circumconic_bary);
  const HLine at_infinity(Vec3{1, 1, 1}, f.frame());
  if (l == at_infinity) throw GeometryError(ErrorCode::Degenerate, "conic is the circumcircle");
  const HPoint direction = meet(l, at_infinity);
  if (on_sideline(direction)) {
    throw GeometryError(ErrorCode::Degenerate, "fourth intersection is a vertex (tangency)");
  }
  return from_barycentric(f, isogonal_conjugate(f, direction)).normalized();
}

namespace {

// Rectangular conic through a, b, c, e: four incidence rows plus x² + y² = 0
// on the coefficient vector.
Conic rectangular_conic_through(const HPoint& a, const HPoint& b, const HPoint& c, const HPoint& e) {
  Matrix system(5, 6);
  const std::array<const HPoint*, 4> pts = {&a, &b, &c, &e};
  for (std::size_t r = 0; r < 4; ++r) {
    const auto& v = pts[r]->coords();
    system(r, 0) = v[0] * v[0];
    system(r, 1) = v[1] * v[1];
    system(r, 2) = v[2] * v[2];
    system(r, 3) = v[1] * v[2];
    system(r, 4) = v[2] * v[0];
    system(r, 5) = v[0] * v[1];
  }
  system(4, 0) = 1;
  system(4, 1) = 1;
  const auto k = nullspace(system);
  if (k.size() != 1) throw GeometryError(ErrorCode::NotUnique, "rectangular conic not unique");
  return Conic::from_coefficients({k[0][0], k[0][1], k[0][2], k[0][3], k[0][4], k[0][5]});
}

}  // namespace

Th4Report check_lemma_th4(const HPoint& a, const HPoint& b, const HPoint& c, const HPoint& extra) {
  const TriangleFrame f = make_frame(a, b, c);
  for (const HPoint* v : {&a, &b, &c}) {
    if (*v == extra) throw GeometryError(ErrorCode::DuplicatePoint, "extra point is a vertex");
  }
  const HPoint h = orthocenter(f);
  const Conic hyperbola = rectangular_conic_through(a, b, c, extra).display();
  const ConicClass cls = classify(hyperbola);

  const HPoint d = fourth_circumcircle_point(f, conic_change_frame(hyperbola, f.frame()));
  const bool degenerate = hyperbola.is_degenerate();
  const HPoint center = degenerate ? singular_point(hyperbola) : conic_center(hyperbola);
  const HPoint mid = midpoint(h, d);

  const bool shape_ok = cls == ConicClass::RectangularHyperbola || cls == ConicClass::DegenerateRank2;
  const bool ok = shape_ok && incidence(hyperbola, h).is_zero() && incidence(hyperbola, d).is_zero() &&
                  center == mid;
  return Th4Report{hyperbola, cls, h, d, center, mid, degenerate, ok};
}

Th4Report check_lemma_th4(const std::array<ExtendedRational, 3>& t, const HPoint& extra) {
  return check_lemma_th4(circle_point(t[0]), circle_point(t[1]), circle_point(t[2]), extra);
}

std::string_view to_string(Lemma1Status s) {
  switch (s) {
    case Lemma1Status::Ok: return "ok";
    case Lemma1Status::H1LinePair: return "h1_degenerates_to_perpendicular_lines";
    case Lemma1Status::H2LinePair: return "h2_degenerates_to_perpendicular_lines";
    case Lemma1Status::Failed: return "failed";
  }
  return "unknown";
}

namespace {

Conic line_pair(const HLine& l1, const HLine& l2) {
  const Vec3& p = l1.coeffs();
  const Vec3& q = l2.coeffs();
  Mat3 m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = p[i] * q[j] + p[j] * q[i];
  return Conic(m, l1.frame());
}

HPoint center_of(const Conic& c) {
  return c.is_degenerate() ? singular_point(c) : conic_center(c);
}

}  // namespace

Lemma1Report check_lemma1(const std::array<HPoint, 4>& abcd) {
  const HPoint& a = abcd[0];
  const HPoint& b = abcd[1];
  const HPoint& c = abcd[2];
  const HPoint& d = abcd[3];
  const TriangleFrame bcd = make_frame(b, c, d);
  const TriangleFrame abc = make_frame(a, b, c);

  Lemma1Report report;
  report.midpoint_bc = midpoint(b, c);
  const Point2 pb = b.affine();
  const Point2 pc = c.affine();
  const Point2 m = report.midpoint_bc.affine();
  const HLine bisector = line_through(report.midpoint_bc,
                                      HPoint::affine(m.x - (pc.y - pb.y), m.y + (pc.x - pb.x)));
  const HLine bisector_bcd = change_frame(bisector, bcd.frame());

  if (bisector_bcd[2].is_zero()) {
    // D on the bisector: H1 is BC together with the bisector.
    const Conic h1 = line_pair(line_through(b, c), bisector);
    report.status = Lemma1Status::H1LinePair;
    report.h1 = h1;
    report.h1_class = classify(h1);
    report.h1_center = center_of(h1);
    return report;
  }

  const Conic h1 = conic_change_frame(isogonal_image_of_line(bcd, bisector_bcd), Frame::cartesian()).display();
  report.h1 = h1;
  report.h1_class = classify(h1);
  report.h1_center = center_of(h1);

  const Conic h1_abc = conic_change_frame(h1, abc.frame());
  if (incidence(h1_abc, abc.vertex_barycentric(0)).is_zero()) {
    report.status = Lemma1Status::H2LinePair;
    return report;
  }
  const Conic h2 = conic_change_frame(isogonal_image_of_conic_bc(abc, h1_abc), Frame::cartesian()).display();
  report.h2 = h2;
  report.h2_class = classify(h2);
  report.h2_center = center_of(h2);

  const bool ok = report.h1_class == ConicClass::RectangularHyperbola &&
                  report.h2_class == ConicClass::RectangularHyperbola &&
                  *report.h1_center == report.midpoint_bc && *report.h2_center == report.midpoint_bc;
  report.status = ok ? Lemma1Status::Ok : Lemma1Status::Failed;
  return report;
}

HarmonicReport check_harmonic(const std::array<HPoint, 4>& abcd) {
  const TriangleFrame abc = make_frame(abcd[0], abcd[1], abcd[2]);
  HarmonicReport report;
  const HPoint inf_d = from_barycentric(abc, isogonal_conjugate(abc, to_barycentric(abc, abcd[3]))).display();
  report.infinity_d = inf_d;
  if (!inf_d.is_at_infinity()) return report;

  const HPoint o = circumcenter(abc);
  const Point2 oc = o.affine();
  const Rational r2 = squared_distance(o, abcd[0]);
  const Rational dx = inf_d[0];
  const Rational dy = inf_d[1];
  Rational s;
  if (!rational_sqrt(r2 / (dx * dx + dy * dy), &s)) return report;

  report.rational_chord = true;
  const HPoint k = HPoint::affine(oc.x + s * dx, oc.y + s * dy);
  const HPoint l = HPoint::affine(oc.x - s * dx, oc.y - s * dy);
  report.k = k;
  report.l = l;
  const ExtendedRational cr = cross_ratio(o, inf_d, k, l);
  report.value = cr;
  report.ok = squared_distance(o, k) == r2 && squared_distance(o, l) == r2 && !is_infinite(cr) &&
              std::get<Rational>(cr) == Rational(-1);
  return report;
}

}  // namespace eightconic
