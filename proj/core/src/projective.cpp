#include "eightconic/projective.hpp"

#include <ostream>
#include <sstream>

#include "eightconic/errors.hpp"

namespace eightconic {

Frame Frame::barycentric(const std::array<Point2, 3>& vertices) {
  Frame f;
  f.vertices_ = std::make_shared<const std::array<Point2, 3>>(vertices);
  return f;
}

const std::array<Point2, 3>& Frame::vertices() const {
  if (!vertices_) throw GeometryError(ErrorCode::WrongFrame, "Cartesian frame has no vertices");
  return *vertices_;
}

Mat3 Frame::to_cartesian() const {
  if (!vertices_) return identity3();
  const auto& v = *vertices_;
  return {Vec3{v[0].x, v[1].x, v[2].x}, Vec3{v[0].y, v[1].y, v[2].y}, Vec3{1, 1, 1}};
}

std::string Frame::describe() const {
  if (!vertices_) return "cartesian";
  std::ostringstream os;
  os << "barycentric[";
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) os << "; ";
    os << (*vertices_)[i].x << ", " << (*vertices_)[i].y;
  }
  os << "]";
  return os.str();
}

bool operator==(const Frame& a, const Frame& b) {
  if (a.vertices_ == b.vertices_) return true;
  if (!a.vertices_ || !b.vertices_) return false;
  return *a.vertices_ == *b.vertices_;
}

void require_same_frame(const Frame& a, const Frame& b) {
  if (!(a == b)) {
    throw GeometryError(ErrorCode::FrameMismatch, a.describe() + " vs " + b.describe());
  }
}

bool projectively_equal(const Vec3& a, const Vec3& b) {
  return a[0] * b[1] == a[1] * b[0] && a[0] * b[2] == a[2] * b[0] && a[1] * b[2] == a[2] * b[1];
}

HPoint::HPoint(const Vec3& coords, Frame frame) : coords_(coords), frame_(std::move(frame)) {
  if (eightconic::is_zero(coords_)) throw GeometryError(ErrorCode::ZeroVector, "point (0:0:0)");
}

bool HPoint::is_at_infinity() const {
  if (frame_.is_cartesian()) return coords_[2].is_zero();
  return (coords_[0] + coords_[1] + coords_[2]).is_zero();
}

Point2 HPoint::affine() const {
  if (!frame_.is_cartesian()) throw GeometryError(ErrorCode::WrongFrame, "affine() needs Cartesian");
  if (coords_[2].is_zero()) throw GeometryError(ErrorCode::PointAtInfinity, "no affine coordinates");
  return {coords_[0] / coords_[2], coords_[1] / coords_[2]};
}

HPoint HPoint::normalized() const {
  if (is_at_infinity()) return display();
  const Rational w = frame_.is_cartesian() ? coords_[2] : coords_[0] + coords_[1] + coords_[2];
  return HPoint(scale(coords_, w.inverse()), frame_);
}

HPoint HPoint::display() const { return HPoint(primitive(coords_), frame_); }

HPoint HPoint::scaled(const Rational& s) const { return HPoint(scale(coords_, s), frame_); }

bool operator==(const HPoint& a, const HPoint& b) {
  return a.frame_ == b.frame_ && projectively_equal(a.coords_, b.coords_);
}

HLine::HLine(const Vec3& coeffs, Frame frame) : coeffs_(coeffs), frame_(std::move(frame)) {
  if (eightconic::is_zero(coeffs_)) throw GeometryError(ErrorCode::ZeroVector, "line (0:0:0)");
}

bool HLine::contains(const HPoint& p) const {
  require_same_frame(frame_, p.frame());
  return dot(coeffs_, p.coords()).is_zero();
}

bool HLine::is_line_at_infinity() const {
  if (frame_.is_cartesian()) return projectively_equal(coeffs_, Vec3{0, 0, 1});
  return projectively_equal(coeffs_, Vec3{1, 1, 1});
}

bool operator==(const HLine& a, const HLine& b) {
  return a.frame_ == b.frame_ && projectively_equal(a.coeffs_, b.coeffs_);
}

HLine line_through(const HPoint& p, const HPoint& q) {
  require_same_frame(p.frame(), q.frame());
  const Vec3 l = cross(p.coords(), q.coords());
  if (is_zero(l)) throw GeometryError(ErrorCode::SamePoint, "line through coincident points");
  return HLine(l, p.frame());
}

HPoint meet(const HLine& l1, const HLine& l2) {
  require_same_frame(l1.frame(), l2.frame());
  const Vec3 p = cross(l1.coeffs(), l2.coeffs());
  if (is_zero(p)) throw GeometryError(ErrorCode::SameLine, "meet of coincident lines");
  return HPoint(p, l1.frame());
}

bool collinear(const HPoint& p, const HPoint& q, const HPoint& r) {
  require_same_frame(p.frame(), q.frame());
  require_same_frame(p.frame(), r.frame());
  return det(Mat3{p.coords(), q.coords(), r.coords()}).is_zero();
}

namespace {

Rational minor2(const Vec3& a, const Vec3& b, std::size_t i, std::size_t j) {
  return a[i] * b[j] - a[j] * b[i];
}

}  // namespace

ExtendedRational cross_ratio(const HPoint& p1, const HPoint& p2, const HPoint& p3,
                             const HPoint& p4) {
  const std::array<const HPoint*, 4> pts = {&p1, &p2, &p3, &p4};
  for (const HPoint* p : pts) require_same_frame(p1.frame(), p->frame());

  std::size_t distinct = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    bool fresh = true;
    for (std::size_t j = 0; j < i; ++j) fresh = fresh && !(*pts[i] == *pts[j]);
    if (fresh) ++distinct;
  }
  if (distinct < 3) {
    throw GeometryError(ErrorCode::TooManyCoincident, "cross ratio needs three distinct points");
  }

  const Vec3& base_p = p1.coords();
  const HPoint* other = nullptr;
  for (std::size_t i = 1; i < 4 && other == nullptr; ++i) {
    if (!(*pts[i] == p1)) other = pts[i];
  }
  const Vec3& base_q = other->coords();
  for (const HPoint* p : pts) {
    if (!det(Mat3{base_p, base_q, p->coords()}).is_zero()) {
      throw GeometryError(ErrorCode::NotCollinear, "cross ratio of non-collinear points");
    }
  }

  // Write each point as alpha*P + beta*Q using a non-vanishing 2x2 minor.
  std::size_t ci = 0;
  std::size_t cj = 1;
  if (minor2(base_p, base_q, 0, 1).is_zero()) {
    if (!minor2(base_p, base_q, 0, 2).is_zero()) {
      cj = 2;
    } else {
      ci = 1;
      cj = 2;
    }
  }
  const Rational pq = minor2(base_p, base_q, ci, cj);
  std::array<std::array<Rational, 2>, 4> t;
  for (std::size_t k = 0; k < 4; ++k) {
    const Vec3& x = pts[k]->coords();
    t[k] = {minor2(x, base_q, ci, cj) / pq, minor2(base_p, x, ci, cj) / pq};
  }
  auto d = [&](std::size_t i, std::size_t j) { return t[i][0] * t[j][1] - t[j][0] * t[i][1]; };

  const Rational num = d(2, 0) * d(3, 1);
  const Rational den = d(2, 1) * d(3, 0);
  if (den.is_zero()) {
    if (num.is_zero()) throw GeometryError(ErrorCode::TooManyCoincident, "cross ratio 0/0");
    return Infinity{};
  }
  return num / den;
}

HPoint midpoint(const HPoint& p, const HPoint& q) {
  require_same_frame(p.frame(), q.frame());
  if (!p.frame().is_cartesian()) throw GeometryError(ErrorCode::WrongFrame, "midpoint needs Cartesian");
  const Point2 a = p.affine();
  const Point2 b = q.affine();
  return HPoint::affine((a.x + b.x) / 2, (a.y + b.y) / 2);
}

Rational squared_distance(const HPoint& p, const HPoint& q) {
  const Point2 a = p.affine();
  const Point2 b = q.affine();
  const Rational dx = a.x - b.x;
  const Rational dy = a.y - b.y;
  return dx * dx + dy * dy;
}

HPoint change_frame(const HPoint& p, const Frame& dst) {
  if (p.frame() == dst) return p;
  const Vec3 cart = multiply(p.frame().to_cartesian(), p.coords());
  if (dst.is_cartesian()) return HPoint(cart, dst);
  return HPoint(multiply(adjugate(dst.to_cartesian()), cart), dst);
}

HLine change_frame(const HLine& l, const Frame& dst) {
  if (l.frame() == dst) return l;
  // Points map as cart = T p, so lines map as l_cart ~ adj(T)^T l.
  const Vec3 cart = multiply(transpose(adjugate(l.frame().to_cartesian())), l.coeffs());
  if (dst.is_cartesian()) return HLine(cart, dst);
  return HLine(multiply(transpose(dst.to_cartesian()), cart), dst);
}

std::ostream& operator<<(std::ostream& os, const HPoint& p) {
  const auto& c = p.coords();
  return os << "(" << c[0] << ":" << c[1] << ":" << c[2] << ")";
}

std::ostream& operator<<(std::ostream& os, const HLine& l) {
  const auto& c = l.coeffs();
  return os << "[" << c[0] << ":" << c[1] << ":" << c[2] << "]";
}

}  // namespace eightconic
