#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "eightconic/rational.hpp"

namespace eightconic {

using Vec3 = std::array<Rational, 3>;
using Mat3 = std::array<Vec3, 3>;

Rational dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
Vec3 scale(const Vec3& v, const Rational& s);
Vec3 add(const Vec3& a, const Vec3& b);
Vec3 sub(const Vec3& a, const Vec3& b);
bool is_zero(const Vec3& v);

Rational det(const Mat3& m);
Mat3 adjugate(const Mat3& m);
Mat3 transpose(const Mat3& m);
Mat3 multiply(const Mat3& a, const Mat3& b);
Vec3 multiply(const Mat3& m, const Vec3& v);
Mat3 identity3();

/// Dense row-major rational matrix; sized for the small systems used here
/// (conic fitting is 5x6).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Row echelon form computed by fraction-free (Bareiss) elimination after
/// clearing each row's denominators. Entries of the result are integers.
struct EchelonForm {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

EchelonForm bareiss_echelon(const Matrix& m);

/// Exact kernel basis. Each vector is scaled to a primitive integer vector
/// whose first nonzero entry is positive. Empty iff the kernel is trivial.
std::vector<std::vector<Rational>> nullspace(const Matrix& m);

std::size_t rank(const Matrix& m);
std::size_t rank(const Mat3& m);

/// Determinant of a square matrix via Bareiss elimination.
Rational determinant(const Matrix& m);

/// Divides by the gcd of the numerators and multiplies by the lcm of the
/// denominators, then makes the first nonzero entry positive.
std::vector<Rational> primitive(const std::vector<Rational>& v);
Vec3 primitive(const Vec3& v);

}  // namespace eightconic
