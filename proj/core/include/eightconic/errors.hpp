#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eightconic {

enum class ErrorCode {
  ZeroVector,
  FrameMismatch,
  WrongFrame,
  SamePoint,
  SameLine,
  NotCollinear,
  TooManyCoincident,
  Collinear,
  PointAtInfinity,
  Coincident,
  EquilateralFrame,
  OnSideline,
  NotUnique,
  DuplicatePoint,
  VertexInput,
  DegenerateAllZero,
  Degenerate,
  LineOnConic,
  ThroughVertex,
  SamplingFailed,
  PassesThroughA,
  NotThroughBC,
  IsogonalUndefined,
  DegenerateQuadrilateral,
  EquilateralSubtriangle,
  NonConvexOrder,
  NoGeneralPositionFive,
  NotOnEulerLine,
  ValidationFailed,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every geometric precondition failure in the library is reported through
// this exception; code() is what callers branch on.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace eightconic
