#pragma once

#include <array>
#include <optional>
#include <string>

#include "eightconic/conic.hpp"
#include "eightconic/eightpoint.hpp"

namespace eightconic {

/// Rectangular hyperbola through A, B, C: its fourth meeting point D with
/// the circumcircle and the center-is-midpoint-of-HD property.
struct Th4Report {
  Conic hyperbola;  // Cartesian
  ConicClass classification;
  HPoint orthocenter;
  HPoint fourth_point;  // D
  HPoint center;        // conic center, or the lines' crossing if degenerate
  HPoint midpoint;      // of H and D
  bool degenerate = false;
  bool ok = false;
};

/// Fourth intersection (besides the vertices) of a circumconic of f with the
/// circumcircle of f, found exactly through the conic's isogonal line.
/// Throws Degenerate when that point is one of the vertices.
HPoint fourth_circumcircle_point(const TriangleFrame& f, const Conic& circumconic_bary);

/// Fits the conic through A, B, C, their orthocenter H and `extra` (which
/// makes it a rectangular hyperbola) and compares its center with the
/// midpoint of H and the fourth circumcircle point D.
Th4Report check_lemma_th4(const HPoint& a, const HPoint& b, const HPoint& c,
                          const HPoint& extra);
Th4Report check_lemma_th4(const std::array<ExtendedRational, 3>& t, const HPoint& extra);

enum class Lemma1Status {
  Ok,
  H1LinePair,  // D on the perpendicular bisector of BC
  H2LinePair,  // A on H1
  Failed,
};

std::string_view to_string(Lemma1Status s);

/// H1 = isogonal image (w.r.t. BCD) of the perpendicular bisector of BC;
/// H2 = isogonal image of H1 w.r.t. ABC. Both should be rectangular
/// hyperbolas centered at the midpoint of BC.
struct Lemma1Report {
  Lemma1Status status = Lemma1Status::Failed;
  HPoint midpoint_bc = HPoint::affine(0, 0);
  std::optional<Conic> h1;  // Cartesian; the line pair BC·ℓ when degenerate
  std::optional<Conic> h2;  // Cartesian
  std::optional<ConicClass> h1_class;
  std::optional<ConicClass> h2_class;
  std::optional<HPoint> h1_center;
  std::optional<HPoint> h2_center;

  bool ok() const { return status == Lemma1Status::Ok; }
};

Lemma1Report check_lemma1(const std::array<HPoint, 4>& abcd);

/// Harmonic division (O, ∞_D; K, L) = −1 where ∞_D is the isogonal conjugate
/// of D w.r.t. ABC and K, L are where line O∞_D meets the circumcircle.
/// Only decidable exactly when K and L are rational; otherwise the report is
/// marked irrational and not ok.
struct HarmonicReport {
  bool rational_chord = false;
  std::optional<HPoint> infinity_d;
  std::optional<HPoint> k;
  std::optional<HPoint> l;
  std::optional<ExtendedRational> value;
  bool ok = false;
};

HarmonicReport check_harmonic(const std::array<HPoint, 4>& abcd);

}  // namespace eightconic
