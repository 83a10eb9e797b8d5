#include "eightconic/conic.hpp"

#include <ostream>
#include <vector>

#include "eightconic/errors.hpp"

namespace eightconic {

std::string_view to_string(ConicClass c) {
  switch (c) {
    case ConicClass::DegenerateRank1: return "degenerate_rank1";
    case ConicClass::DegenerateRank2: return "degenerate_rank2";
    case ConicClass::Ellipse: return "ellipse";
    case ConicClass::Circle: return "circle";
    case ConicClass::Parabola: return "parabola";
    case ConicClass::Hyperbola: return "hyperbola";
    case ConicClass::RectangularHyperbola: return "rectangular_hyperbola";
  }
  return "unknown";
}

Conic::Conic(const Mat3& m, Frame frame) : m_(m), frame_(std::move(frame)) {
  if (!(m_[0][1] == m_[1][0] && m_[0][2] == m_[2][0] && m_[1][2] == m_[2][1])) {
    throw GeometryError(ErrorCode::InvalidArgument, "conic matrix is not symmetric");
  }
  if (is_zero(m_[0]) && is_zero(m_[1]) && is_zero(m_[2])) {
    throw GeometryError(ErrorCode::ZeroVector, "zero conic matrix");
  }
}

Conic Conic::from_coefficients(const ConicCoefficients& c, Frame frame) {
  const Rational half(Integer(1), Integer(2));
  const Rational yz = c[3] * half;
  const Rational zx = c[4] * half;
  const Rational xy = c[5] * half;
  return Conic({Vec3{c[0], xy, zx}, Vec3{xy, c[1], yz}, Vec3{zx, yz, c[2]}}, std::move(frame));
}

ConicCoefficients Conic::coefficients() const {
  return {m_[0][0], m_[1][1], m_[2][2], Rational(2) * m_[1][2], Rational(2) * m_[0][2],
          Rational(2) * m_[0][1]};
}

Conic Conic::display() const {
  const auto p = primitive(
      std::vector<Rational>{m_[0][0], m_[1][1], m_[2][2], m_[1][2], m_[0][2], m_[0][1]});
  return Conic({Vec3{p[0], p[5], p[4]}, Vec3{p[5], p[1], p[3]}, Vec3{p[4], p[3], p[2]}}, frame_);
}

Conic unit_circle() {
  return Conic({Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, -1}});
}

Conic circumcircle_barycentric(const TriangleFrame& f) {
  return Conic::from_coefficients({0, 0, 0, f.a2(), f.b2(), f.c2()}, f.frame());
}

Rational incidence(const Conic& c, const HPoint& p) {
  require_same_frame(c.frame(), p.frame());
  return dot(p.coords(), multiply(c.matrix(), p.coords()));
}

Conic conic_through_five(std::span<const HPoint> points) {
  if (points.size() != 5) throw GeometryError(ErrorCode::InvalidArgument, "need exactly five points");
  for (const auto& p : points) require_same_frame(points[0].frame(), p.frame());
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (points[i] == points[j]) throw GeometryError(ErrorCode::DuplicatePoint, "repeated fitting point");

  Matrix system(5, 6);
  for (std::size_t r = 0; r < 5; ++r) {
    const auto& v = points[r].coords();
    system(r, 0) = v[0] * v[0];
    system(r, 1) = v[1] * v[1];
    system(r, 2) = v[2] * v[2];
    system(r, 3) = v[1] * v[2];
    system(r, 4) = v[2] * v[0];
    system(r, 5) = v[0] * v[1];
  }
  const auto kernel = nullspace(system);
  if (kernel.size() != 1) {
    throw GeometryError(ErrorCode::NotUnique, "five points do not determine a unique conic");
  }
  const auto& k = kernel.front();
  return Conic::from_coefficients({k[0], k[1], k[2], k[3], k[4], k[5]}, points[0].frame());
}

Conic conic_through_five(const HPoint& p1, const HPoint& p2, const HPoint& p3, const HPoint& p4,
                         const HPoint& p5) {
  const std::array<HPoint, 5> pts = {p1, p2, p3, p4, p5};
  return conic_through_five(std::span<const HPoint>(pts));
}

namespace {

bool is_vertex(const BarycentricCoords& b) {
  int zeros = 0;
  for (const auto& c : b.coords()) zeros += c.is_zero() ? 1 : 0;
  return zeros == 2;
}

}  // namespace

Conic circumconic_formula(const TriangleFrame& f, const BarycentricCoords& dpt,
                          const BarycentricCoords& xpt) {
  require_same_frame(f.frame(), dpt.frame());
  require_same_frame(f.frame(), xpt.frame());
  if (is_vertex(dpt) || is_vertex(xpt)) {
    throw GeometryError(ErrorCode::VertexInput, "circumconic formula needs non-vertex points");
  }
  const Rational& d = dpt[0];
  const Rational& e = dpt[1];
  const Rational& ff = dpt[2];
  const Rational& p = xpt[0];
  const Rational& q = xpt[1];
  const Rational& r = xpt[2];
  const Rational alpha = d * p * (ff * q - e * r);
  const Rational beta = e * q * (d * r - ff * p);
  const Rational gamma = ff * r * (e * p - d * q);
  if (alpha.is_zero() && beta.is_zero() && gamma.is_zero()) {
    throw GeometryError(ErrorCode::DegenerateAllZero, "all circumconic coefficients vanish");
  }
  return Conic::from_coefficients({0, 0, 0, alpha, beta, gamma}, f.frame());
}

Conic conic_change_frame(const Conic& c, const Frame& dst) {
  if (c.frame() == dst) return c;
  // p_src ~ adj(T_src)·cart and cart = T_dst·p_dst.
  const Mat3 to_src = multiply(adjugate(c.frame().to_cartesian()), dst.to_cartesian());
  return Conic(multiply(transpose(to_src), multiply(c.matrix(), to_src)), dst);
}

ConicClass classify(const Conic& c) {
  if (!c.frame().is_cartesian()) throw GeometryError(ErrorCode::WrongFrame, "classify needs Cartesian");
  const Mat3& m = c.matrix();
  const std::size_t r = rank(m);
  if (r == 1) return ConicClass::DegenerateRank1;
  if (r == 2) return ConicClass::DegenerateRank2;
  // B² − 4AC = 4(m01² − m00·m11)
  const int disc = (m[0][1] * m[0][1] - m[0][0] * m[1][1]).sign();
  if (disc < 0) {
    return (m[0][0] == m[1][1] && m[0][1].is_zero()) ? ConicClass::Circle : ConicClass::Ellipse;
  }
  if (disc == 0) return ConicClass::Parabola;
  return (m[0][0] + m[1][1]).is_zero() ? ConicClass::RectangularHyperbola : ConicClass::Hyperbola;
}

HPoint conic_center(const Conic& c) {
  if (!c.frame().is_cartesian()) throw GeometryError(ErrorCode::WrongFrame, "center needs Cartesian");
  if (c.is_degenerate()) throw GeometryError(ErrorCode::Degenerate, "degenerate conic has no center");
  const Mat3& m = c.matrix();
  return HPoint(cross(m[0], m[1]), c.frame()).normalized();
}

HPoint singular_point(const Conic& c) {
  const Mat3& m = c.matrix();
  if (rank(m) != 2) throw GeometryError(ErrorCode::Degenerate, "singular point needs a rank-2 conic");
  Matrix mm(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) mm(i, j) = m[i][j];
  const auto k = nullspace(mm);
  return HPoint(Vec3{k[0][0], k[0][1], k[0][2]}, c.frame()).normalized();
}

HPoint second_intersection(const Conic& c, const HLine& l, const HPoint& p) {
  require_same_frame(c.frame(), l.frame());
  require_same_frame(c.frame(), p.frame());
  if (!incidence(c, p).is_zero()) throw GeometryError(ErrorCode::InvalidArgument, "p is not on the conic");
  if (!l.contains(p)) throw GeometryError(ErrorCode::InvalidArgument, "p is not on the line");

  std::optional<Vec3> q;
  for (std::size_t i = 0; i < 3 && !q; ++i) {
    Vec3 e{0, 0, 0};
    e[i] = 1;
    const Vec3 cand = cross(l.coeffs(), e);
    if (!is_zero(cand) && !projectively_equal(cand, p.coords())) q = cand;
  }
  const Vec3 mq = multiply(c.matrix(), *q);
  const Rational pmq = dot(p.coords(), mq);
  const Rational qmq = dot(*q, mq);
  if (!qmq.is_zero()) {
    const Rational s = Rational(-2) * pmq / qmq;
    return HPoint(add(p.coords(), scale(*q, s)), c.frame());
  }
  if (!pmq.is_zero()) return HPoint(*q, c.frame());
  throw GeometryError(ErrorCode::LineOnConic, "line lies on the conic");
}

namespace {

constexpr int kMaxSamplingAttempts = 256;

bool contains_point(const std::vector<HPoint>& pts, const HPoint& p) {
  for (const auto& q : pts)
    if (q == p) return true;
  return false;
}

void validate_on(const Conic& c, std::span<const HPoint> pts, const char* what) {
  for (const auto& p : pts) {
    if (!incidence(c, p).is_zero()) {
      throw GeometryError(ErrorCode::ValidationFailed, std::string(what) + ": sample off the fitted conic");
    }
  }
}

}  // namespace

Conic isogonal_image_of_line(const TriangleFrame& f, const HLine& l) {
  require_same_frame(f.frame(), l.frame());
  if (l[0].is_zero() || l[1].is_zero() || l[2].is_zero()) {
    throw GeometryError(ErrorCode::ThroughVertex, "line passes through a vertex; its image is a line");
  }
  if (l.is_line_at_infinity()) {
    throw GeometryError(ErrorCode::InvalidArgument, "line at infinity is excluded");
  }

  std::vector<HPoint> samples;
  for (int k = 1; k <= kMaxSamplingAttempts && samples.size() < 5; ++k) {
    const Rational kk(k);
    const Vec3 v = cross(l.coeffs(), Vec3{1, kk, kk * kk});
    if (is_zero(v)) continue;
    const HPoint s(v, f.frame());
    if (on_sideline(s) || contains_point(samples, s)) continue;
    samples.push_back(s);
  }
  if (samples.size() < 5) throw GeometryError(ErrorCode::SamplingFailed, "not enough samples on the line");

  std::vector<HPoint> images;
  for (const auto& s : samples) images.push_back(isogonal_conjugate(f, s));
  const Conic fitted = conic_through_five(f.vertex_barycentric(0), f.vertex_barycentric(1),
                                          f.vertex_barycentric(2), images[0], images[1]);
  validate_on(fitted, std::span<const HPoint>(images).subspan(2), "isogonal_image_of_line");
  return fitted;
}

HLine isogonal_line_of_circumconic(const TriangleFrame& f, const Conic& c) {
  require_same_frame(f.frame(), c.frame());
  const auto k = c.coefficients();
  if (!k[0].is_zero() || !k[1].is_zero() || !k[2].is_zero()) {
    throw GeometryError(ErrorCode::InvalidArgument, "not a circumconic of the frame");
  }
  return HLine(Vec3{k[3] / f.a2(), k[4] / f.b2(), k[5] / f.c2()}, f.frame());
}

Conic isogonal_image_of_conic_bc(const TriangleFrame& f, const Conic& c) {
  require_same_frame(f.frame(), c.frame());
  const HPoint a = f.vertex_barycentric(0);
  const HPoint b = f.vertex_barycentric(1);
  const HPoint cc = f.vertex_barycentric(2);
  if (!incidence(c, b).is_zero() || !incidence(c, cc).is_zero()) {
    throw GeometryError(ErrorCode::NotThroughBC, "conic must pass through B and C");
  }
  if (incidence(c, a).is_zero()) {
    throw GeometryError(ErrorCode::PassesThroughA, "conic through A: image degenerates to lines");
  }

  // Pencil through B: the line joining B to (1 : 0 : k) on AC.
  std::vector<HPoint> samples;
  for (int k = 1; k <= kMaxSamplingAttempts && samples.size() < 8; ++k) {
    const HLine pencil(cross(b.coords(), Vec3{1, 0, Rational(k)}), f.frame());
    HPoint s = [&] {
      try {
        return second_intersection(c, pencil, b);
      } catch (const GeometryError& e) {
        if (e.code() != ErrorCode::LineOnConic) throw;
        return b;
      }
    }();
    if (s == b || s == cc || on_sideline(s) || contains_point(samples, s)) continue;
    samples.push_back(s);
  }
  if (samples.size() < 8) throw GeometryError(ErrorCode::SamplingFailed, "not enough samples on the conic");

  std::vector<HPoint> images;
  for (const auto& s : samples) images.push_back(isogonal_conjugate(f, s));
  const Conic fitted = conic_through_five(std::span<const HPoint>(images).first(5));
  validate_on(fitted, std::span<const HPoint>(images).subspan(5), "isogonal_image_of_conic_bc");
  const std::array<HPoint, 2> bc = {b, cc};
  validate_on(fitted, bc, "isogonal_image_of_conic_bc");
  return fitted;
}

bool conics_equal(const Conic& c1, const Conic& c2) {
  require_same_frame(c1.frame(), c2.frame());
  const auto a = c1.coefficients();
  const auto b = c2.coefficients();
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const Conic& c) {
  const auto& m = c.matrix();
  os << "[";
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) os << "; ";
    os << m[i][0] << " " << m[i][1] << " " << m[i][2];
  }
  return os << "]";
}

}  // namespace eightconic
