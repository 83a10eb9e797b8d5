#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "eightconic/rational.hpp"

namespace eightconic {

/// Position on a triangle's Euler line, P = O + λ(H − O), held as the
/// projective pair (num:den). den = 0 encodes λ = ∞, the line's point at
/// infinity. Always stored as coprime integers with den >= 0 (num = 1 when
/// den = 0).
class EulerParameter {
 public:
  EulerParameter(const Rational& num, const Rational& den);
  EulerParameter(const Rational& value)  // NOLINT(google-explicit-constructor)
      : EulerParameter(value, Rational(1)) {}
  EulerParameter(int value) : EulerParameter(Rational(value), Rational(1)) {}  // NOLINT

  static EulerParameter infinity() { return EulerParameter(Rational(1), Rational(0)); }
  static EulerParameter from_extended(const ExtendedRational& v);

  const Rational& num() const { return num_; }
  const Rational& den() const { return den_; }
  bool is_infinite() const { return den_.is_zero(); }
  std::optional<Rational> value() const;
  ExtendedRational extended() const;

  std::string str() const;

  friend bool operator==(const EulerParameter&, const EulerParameter&) = default;

 private:
  Rational num_;
  Rational den_;
};

/// Constant Shinagawa coefficients (u, v): the center's first barycentric
/// coordinate is u·S² + v·S_B·S_C. Meaningful up to a common factor, so
/// equality is projective.
struct ShinagawaPair {
  Rational u;
  Rational v;

  ShinagawaPair(const Rational& u_, const Rational& v_);

  /// Primitive integer representative, first nonzero entry positive.
  ShinagawaPair normalized() const;
  std::string str() const;

  friend bool operator==(const ShinagawaPair& a, const ShinagawaPair& b) {
    return a.u * b.v == a.v * b.u;
  }
};

/// λ = (u + v) / (3u + v); ∞ when 3u + v = 0.
EulerParameter shinagawa_to_lambda(const ShinagawaPair& s);

/// Inverse map: u / v = (1 − λ) / (3λ − 1), returned in primitive form.
ShinagawaPair lambda_to_shinagawa(const EulerParameter& lam);

std::ostream& operator<<(std::ostream& os, const EulerParameter& lam);
std::ostream& operator<<(std::ostream& os, const ShinagawaPair& s);

}  // namespace eightconic
