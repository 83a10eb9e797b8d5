#pragma once

#include <array>
#include <iosfwd>
#include <memory>
#include <string>

#include "eightconic/linalg.hpp"
#include "eightconic/rational.hpp"

namespace eightconic {

struct Point2 {
  Rational x;
  Rational y;
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Coordinate frame tag carried by every point, line and conic.
///
/// Either Cartesian-homogeneous (x:y:w), or barycentric with respect to a
/// triangle given by its three Cartesian vertices. Two barycentric frames
/// are the same frame iff their vertex lists are equal in order.
class Frame {
 public:
  static Frame cartesian() { return Frame(); }
  static Frame barycentric(const std::array<Point2, 3>& vertices);

  bool is_cartesian() const { return vertices_ == nullptr; }
  bool is_barycentric() const { return vertices_ != nullptr; }
  const std::array<Point2, 3>& vertices() const;

  /// Matrix T with cartesian = T * coords for points expressed in this
  /// frame. Identity for the Cartesian frame.
  Mat3 to_cartesian() const;

  std::string describe() const;

  friend bool operator==(const Frame& a, const Frame& b);

 private:
  Frame() = default;
  std::shared_ptr<const std::array<Point2, 3>> vertices_;
};

void require_same_frame(const Frame& a, const Frame& b);

/// Homogeneous point. Equality is projective.
class HPoint {
 public:
  HPoint(const Vec3& coords, Frame frame = Frame::cartesian());
  HPoint(const Rational& x, const Rational& y, const Rational& w,
         Frame frame = Frame::cartesian())
      : HPoint(Vec3{x, y, w}, std::move(frame)) {}

  /// Finite Cartesian point (x, y).
  static HPoint affine(const Rational& x, const Rational& y) { return HPoint(x, y, 1); }
  static HPoint affine(const Point2& p) { return HPoint(p.x, p.y, 1); }

  const Vec3& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const Frame& frame() const { return frame_; }

  bool is_at_infinity() const;
  /// Affine coordinates; Cartesian frame only, throws PointAtInfinity.
  Point2 affine() const;
  /// Coordinates divided so that w = 1 (Cartesian) or x+y+z = 1 (barycentric).
  HPoint normalized() const;
  /// Display form: primitive integer triple, first nonzero entry positive.
  HPoint display() const;

  HPoint scaled(const Rational& s) const;

  friend bool operator==(const HPoint& a, const HPoint& b);

 private:
  Vec3 coords_;
  Frame frame_;
};

/// Homogeneous line; incident with p iff dot(coeffs, p) = 0.
class HLine {
 public:
  HLine(const Vec3& coeffs, Frame frame = Frame::cartesian());

  const Vec3& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  const Frame& frame() const { return frame_; }

  bool contains(const HPoint& p) const;
  bool is_line_at_infinity() const;

  friend bool operator==(const HLine& a, const HLine& b);

 private:
  Vec3 coeffs_;
  Frame frame_;
};

bool projectively_equal(const Vec3& a, const Vec3& b);

HLine line_through(const HPoint& p, const HPoint& q);
HPoint meet(const HLine& l1, const HLine& l2);
bool collinear(const HPoint& p, const HPoint& q, const HPoint& r);

/// Cross ratio (p1,p2;p3,p4) = [(t3-t1)(t4-t2)] / [(t3-t2)(t4-t1)] in any
/// projective parameter t of the common line. Yields Infinity when the
/// denominator vanishes.
ExtendedRational cross_ratio(const HPoint& p1, const HPoint& p2, const HPoint& p3,
                             const HPoint& p4);

HPoint midpoint(const HPoint& p, const HPoint& q);
Rational squared_distance(const HPoint& p, const HPoint& q);

/// Re-expresses a point in another frame (through Cartesian coordinates).
HPoint change_frame(const HPoint& p, const Frame& dst);
HLine change_frame(const HLine& l, const Frame& dst);

std::ostream& operator<<(std::ostream& os, const HPoint& p);
std::ostream& operator<<(std::ostream& os, const HLine& l);

}  // namespace eightconic
