#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eightconic/eightpoint.hpp"

namespace eightconic {

/// Euclidean constructions for the built-in Euler-line centers.
enum class CenterDefinition {
  None,
  Centroid,         // X2: (A + B + C) / 3
  Circumcenter,     // X3
  Orthocenter,      // X4
  NinePointCenter,  // X5: midpoint of O and H
  DeLongchamps,     // X20: reflection of H in O
  EulerInfinity,    // X30: point at infinity of the Euler line
};

HPoint construct_center(const TriangleFrame& f, CenterDefinition def);

/// Solves P = O + λ(H − O). Throws NotOnEulerLine or EquilateralFrame.
EulerParameter solve_euler_parameter(const TriangleFrame& f, const HPoint& p);

struct CatalogEntry {
  std::string name;
  std::string definition;
  ShinagawaPair pair;
  CenterDefinition construction = CenterDefinition::None;
  /// Independent position claim from an extended file's optional column.
  std::optional<EulerParameter> reference_lambda;
};

/// The built-in core X2, X3, X4, X5, X20, X30. Coefficients are not stored:
/// each is obtained by constructing the center on a reference triangle and
/// solving for λ.
std::vector<CatalogEntry> catalog_entries();

class CatalogFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "name,u,v[,lambda]" rows; blank lines and '#' comments are
/// skipped. A name matching a built-in center also picks up its
/// construction. Throws CatalogFormatError.
std::vector<CatalogEntry> load_extended_catalog(std::istream& in);

struct CatalogReport {
  CatalogEntry entry;
  EulerParameter lambda = EulerParameter(0);
  std::optional<VerificationReport> eight_point;
  /// Residuals of the independently constructed Q_X against the entry's
  /// conic; empty when the entry carries no independent construction.
  std::vector<Rational> reference_residuals;
  std::string status;  // "ok", "fail" or an error code name
  bool ok = false;
};

CatalogReport catalog_check(const std::array<CirclePoint, 4>& base, const CatalogEntry& entry);

/// Quadrilateral used by the catalog command when no trials are requested.
std::array<CirclePoint, 4> reference_quadrilateral();

}  // namespace eightconic
