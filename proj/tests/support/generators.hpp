#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "eightconic/campaign.hpp"
#include "eightconic/linalg.hpp"
#include "eightconic/projective.hpp"
#include "eightconic/triangle.hpp"

namespace eightconic::testing {

/// Deterministic generators for property tests, all driven by the library's
/// xorshift64* so failures replay from the printed seed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(splitmix64(seed)) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) { return rng_.uniform(lo, hi); }

  Rational rational(std::int64_t bound = 50) { return random_rational(rng_, bound, bound); }

  Rational nonzero_rational(std::int64_t bound = 50) {
    for (;;) {
      Rational r = rational(bound);
      if (!r.is_zero()) return r;
    }
  }

  /// Rational with numerator and denominator of roughly `digits` decimal digits.
  Rational big_rational(int digits) {
    Integer num = 0, den = 0;
    for (int i = 0; i < digits; ++i) {
      num = num * 10 + static_cast<long>(integer(0, 9));
      den = den * 10 + static_cast<long>(integer(0, 9));
    }
    if (integer(0, 1) == 1) num = -num;
    return Rational(num, den + 1);
  }

  Vec3 vec3(std::int64_t bound = 20) { return {rational(bound), rational(bound), rational(bound)}; }

  Vec3 nonzero_vec3(std::int64_t bound = 20) {
    for (;;) {
      Vec3 v = vec3(bound);
      if (!is_zero(v)) return v;
    }
  }

  HPoint point(std::int64_t bound = 20) { return HPoint(nonzero_vec3(bound)); }

  HPoint finite_point(std::int64_t bound = 20) { return HPoint::affine(rational(bound), rational(bound)); }

  /// Circle parameter in [−bound, bound] with bounded denominator.
  Rational circle_t(std::int64_t bound = 50) { return rational(bound); }

  /// Non-degenerate triangle with small rational vertices.
  TriangleFrame frame(std::int64_t bound = 20) {
    for (;;) {
      const HPoint a = finite_point(bound), b = finite_point(bound), c = finite_point(bound);
      if (a == b || b == c || a == c || collinear(a, b, c)) continue;
      return make_frame(a, b, c);
    }
  }

  Matrix matrix(std::size_t rows, std::size_t cols, std::int64_t bound = 9) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational(bound);
    return m;
  }

  /// Matrix of rank at most `rank`, built as a product of random factors.
  Matrix low_rank_matrix(std::size_t rows, std::size_t cols, std::size_t rank, std::int64_t bound = 5) {
    const Matrix left = matrix(rows, rank, bound);
    const Matrix right = matrix(rank, cols, bound);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t k = 0; k < rank; ++k) m(r, c) += left(r, k) * right(k, c);
    return m;
  }

  Xorshift64Star& engine() { return rng_; }

 private:
  Xorshift64Star rng_;
};

/// Exact rotation by the rational unit vector ((1−s²), 2s)/(1+s²).
inline Mat3 rational_rotation(const Rational& s) {
  const Rational n = Rational(1) + s * s;
  const Rational c = (Rational(1) - s * s) / n;
  const Rational si = Rational(2) * s / n;
  return {{{c, -si, 0}, {si, c, 0}, {0, 0, 1}}};
}

inline Mat3 translation(const Rational& dx, const Rational& dy) {
  return {{{1, 0, dx}, {0, 1, dy}, {0, 0, 1}}};
}

}  // namespace eightconic::testing
