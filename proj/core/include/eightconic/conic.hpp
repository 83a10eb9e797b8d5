#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string_view>

#include "eightconic/projective.hpp"
#include "eightconic/triangle.hpp"

namespace eightconic {

enum class ConicClass {
  DegenerateRank1,
  DegenerateRank2,
  Ellipse,
  Circle,
  Parabola,
  Hyperbola,
  RectangularHyperbola,
};

std::string_view to_string(ConicClass c);

/// Six-term coefficient vector in the order (x², y², z², yz, zx, xy).
using ConicCoefficients = std::array<Rational, 6>;

/// A conic as a symmetric 3x3 matrix m, pᵀ·m·p = 0 on the curve. Only
/// defined up to a nonzero factor; compare with conics_equal.
class Conic {
 public:
  Conic(const Mat3& m, Frame frame = Frame::cartesian());

  static Conic from_coefficients(const ConicCoefficients& c, Frame frame = Frame::cartesian());

  const Mat3& matrix() const { return m_; }
  const Frame& frame() const { return frame_; }
  ConicCoefficients coefficients() const;
  /// Matrix scaled to primitive integer entries, first nonzero positive.
  Conic display() const;

  bool is_degenerate() const { return det(m_).is_zero(); }

 private:
  Mat3 m_;
  Frame frame_;
};

/// x² + y² − w² in the Cartesian frame.
Conic unit_circle();
/// a²yz + b²zx + c²xy in the barycentric frame of f.
Conic circumcircle_barycentric(const TriangleFrame& f);

/// Exact pᵀ·m·p.
Rational incidence(const Conic& c, const HPoint& p);

/// The unique conic through five points (kernel of the 5x6 incidence
/// system). Throws DuplicatePoint, NotUnique or FrameMismatch.
Conic conic_through_five(std::span<const HPoint> points);
Conic conic_through_five(const HPoint& p1, const HPoint& p2, const HPoint& p3,
                         const HPoint& p4, const HPoint& p5);

/// Closed-form circumconic through A, B, C, D = (d:e:f), X = (p:q:r):
///   dp(fq − er)·yz + eq(dr − fp)·zx + fr(ep − dq)·xy = 0.
Conic circumconic_formula(const TriangleFrame& f, const BarycentricCoords& d,
                          const BarycentricCoords& x);

Conic conic_change_frame(const Conic& c, const Frame& dst);

/// Affine type of a Cartesian conic; throws WrongFrame for barycentric ones.
ConicClass classify(const Conic& c);

/// Pole of the line at infinity, adj(m)·(0,0,1)ᵀ. Throws Degenerate for
/// singular matrices; at infinity for parabolas.
HPoint conic_center(const Conic& c);

/// Vertex of a rank-2 conic (the crossing point of its two lines).
HPoint singular_point(const Conic& c);

/// The other point where l meets c, given p on both.
HPoint second_intersection(const Conic& c, const HLine& l, const HPoint& p);

/// Circumconic of f that is the isogonal image of line l (barycentric frame
/// of f). Fitted through sampled conjugates and checked on extra samples.
Conic isogonal_image_of_line(const TriangleFrame& f, const HLine& l);

/// Exact line that a circumconic αyz + βzx + γxy maps to under isogonal
/// conjugation: α/a²·x + β/b²·y + γ/c²·z = 0.
HLine isogonal_line_of_circumconic(const TriangleFrame& f, const Conic& c);

/// Isogonal image of a conic through the frame's second and third vertices
/// (B and C) but not the first (A).
Conic isogonal_image_of_conic_bc(const TriangleFrame& f, const Conic& c);

bool conics_equal(const Conic& c1, const Conic& c2);

std::ostream& operator<<(std::ostream& os, const Conic& c);

}  // namespace eightconic
