#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace eightconic {

using Integer = mpz_class;

/// Exact rational number of unbounded magnitude.
///
/// Always stored in lowest terms with a positive denominator, so structural
/// equality is numeric equality. Backed by GMP's mpq_t.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : q_(static_cast<long>(value)) {}  // NOLINT
  explicit Rational(const Integer& value) : q_(value) {}
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "p", "-p" or "p/q" (decimal integers, optional sign on p).
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational abs() const;
  Rational inverse() const;

  /// Canonical text: "p" for integers, otherwise "p/q".
  std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Renders r as a fixed-point decimal with `digits` fractional digits,
/// rounding half to even. Exact: no floating point is involved.
std::string to_decimal(const Rational& r, int digits = 6);

/// True iff r is the square of a rational; on success writes the root (>= 0).
bool rational_sqrt(const Rational& r, Rational* root);

struct Infinity {
  friend bool operator==(const Infinity&, const Infinity&) = default;
};

/// Element of the projectively extended rationals Q ∪ {∞}.
using ExtendedRational = std::variant<Rational, Infinity>;

inline bool is_infinite(const ExtendedRational& v) {
  return std::holds_alternative<Infinity>(v);
}

/// Parses a rational string or "inf"/"∞".
ExtendedRational parse_extended(std::string_view text);
std::string to_string(const ExtendedRational& v);

}  // namespace eightconic
