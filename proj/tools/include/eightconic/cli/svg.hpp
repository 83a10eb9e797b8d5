#pragma once

#include <string>

#include "eightconic/eightpoint.hpp"

namespace eightconic::cli {

/// 800x800 canvas showing the world window [-2.5, 2.5]², 160 px per unit.
inline constexpr int kCanvasSize = 800;
inline constexpr int kPixelsPerUnit = 160;
inline constexpr int kPencilLines = 256;

/// Shortest decimal at most 6 fractional digits, rounded half to even.
std::string svg_number(const Rational& r);

/// Deterministic SVG 1.1 document of the configuration and its eight-point
/// conic. Degenerate or undefined cases draw the points only and carry a
/// warning line.
std::string render_figure(const CyclicConfig& cfg);

}  // namespace eightconic::cli
