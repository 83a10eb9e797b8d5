#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eightconic/conic.hpp"
#include "eightconic/euler.hpp"
#include "eightconic/triangle.hpp"

namespace eightconic {

/// Rational parametrization of the unit circle:
/// t -> ((1 − t²)/(1 + t²), 2t/(1 + t²)), ∞ -> (−1, 0).
HPoint circle_point(const ExtendedRational& t);

/// A point of the unit circle, remembered in the form it was given.
struct CirclePoint {
  std::variant<ExtendedRational, Point2> source;

  static CirclePoint from_parameter(const ExtendedRational& t) { return {t}; }
  /// Throws InvalidArgument unless x² + y² = 1 exactly.
  static CirclePoint from_xy(const Point2& xy);

  HPoint point() const;
};

using EulerSpec = std::variant<EulerParameter, ShinagawaPair>;

EulerParameter to_lambda(const EulerSpec& spec);

/// Four distinct points A, B, C, D on the unit circle Ω (center O at the
/// origin) and the common Euler-line parameter.
struct CyclicConfig {
  std::array<CirclePoint, 4> points;
  EulerSpec parameter;
  /// Reject quadrilaterals whose vertices are not in cyclic order A, B, C, D.
  bool strict_order = false;

  HPoint vertex(std::size_t i) const { return points[i].point(); }
  EulerParameter lambda() const { return to_lambda(parameter); }
};

inline constexpr std::array<const char*, 4> kVertexNames = {"A", "B", "C", "D"};
inline constexpr std::array<const char*, 8> kPointNames = {"A",   "B",   "C",   "D",
                                                           "Q_A", "Q_B", "Q_C", "Q_D"};

/// Indices of the three vertices forming the sub-triangle that omits vertex
/// `omitted`; vertex order is preserved, so D's frame is (A, B, C).
std::array<std::size_t, 3> sub_triangle(std::size_t omitted);

enum class PointStatus { Ok, IsogonalUndefined };

/// Everything derived from a CyclicConfig. Index X ∈ {0..3} stands for
/// vertex A..D and the sub-triangle omitting it.
struct DerivedConfig {
  std::array<HPoint, 4> vertices;
  std::vector<TriangleFrame> frames;  // frames[X] omits vertex X
  HPoint circumcenter;
  std::array<HPoint, 4> orthocenters;
  std::array<HPoint, 4> euler_points;
  std::array<std::optional<HPoint>, 4> conjugates;             // Cartesian
  std::array<std::optional<BarycentricCoords>, 4> conjugates_abc;  // w.r.t. ABC
  std::array<PointStatus, 4> status{};
  EulerParameter lambda = EulerParameter(0);

  const TriangleFrame& abc() const { return frames[3]; }
  bool all_ok() const;
};

/// Validates cfg and derives H_X, P_X and Q_X. Throws
/// DegenerateQuadrilateral, EquilateralSubtriangle or NonConvexOrder.
DerivedConfig build_configuration(const CyclicConfig& cfg);

struct VerificationReport {
  Conic conic;                        // Cartesian
  std::array<Rational, 8> residuals;  // A, B, C, D, Q_A, Q_B, Q_C, Q_D
  ConicClass classification;
  std::vector<std::size_t> fit_points;  // indices into kPointNames
  /// Some Q_X coincides with another of the eight points.
  bool conjugates_collapsed = false;
  bool ok = false;
  DerivedConfig derived;
};

/// Fits the conic through A, B, C, D and the first new Q_X and substitutes
/// all eight points. Throws IsogonalUndefined or NoGeneralPositionFive.
VerificationReport eight_point_conic(const CyclicConfig& cfg);
VerificationReport eight_point_conic(const DerivedConfig& derived);

/// The eight-point conic in barycentrics of ABC from its closed form, with
/// the three Shinagawa denominators u·S² + v·S_xS_y multiplied out.
Conic phi_uv(const TriangleFrame& abc, const BarycentricCoords& d, const ShinagawaPair& s);

/// Barycentric isogonal conjugate of the (u, v) center of abc,
/// (a²/(uS² + vS_BS_C) : ...). Throws IsogonalUndefined on a zero denominator.
BarycentricCoords shinagawa_conjugate(const TriangleFrame& abc, const ShinagawaPair& s);

}  // namespace eightconic
