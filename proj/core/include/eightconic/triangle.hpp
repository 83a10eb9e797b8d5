#pragma once

#include <array>

#include "eightconic/euler.hpp"
#include "eightconic/projective.hpp"

namespace eightconic {

/// Barycentric coordinates are HPoints whose frame is a triangle's
/// barycentric tag; at infinity iff x + y + z = 0.
using BarycentricCoords = HPoint;

/// A non-degenerate triangle used as a coordinate frame.
///
/// Caches squared side lengths a2, b2, c2 (a2 opposite the first vertex),
/// the Conway symbols S_A, S_B, S_C and S². S itself is never needed.
class TriangleFrame {
 public:
  const std::array<Point2, 3>& vertices() const { return frame_.vertices(); }
  HPoint vertex(std::size_t i) const { return HPoint::affine(vertices()[i]); }
  /// Vertex i in this frame's barycentric coordinates (a unit vector).
  BarycentricCoords vertex_barycentric(std::size_t i) const;

  const Frame& frame() const { return frame_; }

  const Rational& a2() const { return side2_[0]; }
  const Rational& b2() const { return side2_[1]; }
  const Rational& c2() const { return side2_[2]; }
  const std::array<Rational, 3>& side2() const { return side2_; }
  const Rational& sa() const { return conway_[0]; }
  const Rational& sb() const { return conway_[1]; }
  const Rational& sc() const { return conway_[2]; }
  const std::array<Rational, 3>& conway() const { return conway_; }
  const Rational& s2() const { return s2_; }

  bool is_equilateral() const;

  friend TriangleFrame make_frame(const HPoint& v1, const HPoint& v2, const HPoint& v3);

 private:
  explicit TriangleFrame(Frame frame) : frame_(std::move(frame)) {}

  Frame frame_;
  std::array<Rational, 3> side2_;
  std::array<Rational, 3> conway_;
  Rational s2_;
};

TriangleFrame make_frame(const HPoint& v1, const HPoint& v2, const HPoint& v3);

bool all_sides_equal(const Rational& a2, const Rational& b2, const Rational& c2);

BarycentricCoords to_barycentric(const TriangleFrame& f, const HPoint& p);
HPoint from_barycentric(const TriangleFrame& f, const BarycentricCoords& b);
BarycentricCoords reframe(const TriangleFrame& src, const TriangleFrame& dst,
                          const BarycentricCoords& b);

HPoint circumcenter(const TriangleFrame& f);
HPoint orthocenter(const TriangleFrame& f);
HPoint centroid(const TriangleFrame& f);

/// O + λ(H − O); the Euler line's point at infinity for λ = ∞.
HPoint euler_point(const TriangleFrame& f, const EulerParameter& lam);

/// The center with constant Shinagawa coefficients (u, v), in barycentrics:
/// (u·S² + v·S_B·S_C : u·S² + v·S_C·S_A : u·S² + v·S_A·S_B).
BarycentricCoords shinagawa_center(const TriangleFrame& f, const ShinagawaPair& s);

/// (x:y:z) -> (a²yz : b²zx : c²xy). Throws OnSideline if a coordinate is 0.
BarycentricCoords isogonal_conjugate(const TriangleFrame& f, const BarycentricCoords& b);

bool on_sideline(const BarycentricCoords& b);

/// a²yz + b²zx + c²xy; zero iff b lies on the circumcircle.
Rational circumcircle_value(const TriangleFrame& f, const BarycentricCoords& b);

}  // namespace eightconic
