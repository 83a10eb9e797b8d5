#include "eightconic/euler.hpp"

#include <ostream>

#include "eightconic/errors.hpp"
#include "eightconic/linalg.hpp"

namespace eightconic {

EulerParameter::EulerParameter(const Rational& num, const Rational& den) {
  if (num.is_zero() && den.is_zero()) {
    throw GeometryError(ErrorCode::InvalidArgument, "Euler parameter (0:0)");
  }
  auto p = primitive(std::vector<Rational>{den, num});
  den_ = p[0];
  num_ = p[1];
  if (den_.is_zero()) num_ = 1;
}

EulerParameter EulerParameter::from_extended(const ExtendedRational& v) {
  if (eightconic::is_infinite(v)) return infinity();
  return EulerParameter(std::get<Rational>(v));
}

std::optional<Rational> EulerParameter::value() const {
  if (is_infinite()) return std::nullopt;
  return num_ / den_;
}

ExtendedRational EulerParameter::extended() const {
  if (is_infinite()) return Infinity{};
  return num_ / den_;
}

std::string EulerParameter::str() const {
  if (is_infinite()) return "inf";
  return (num_ / den_).str();
}

ShinagawaPair::ShinagawaPair(const Rational& u_, const Rational& v_) : u(u_), v(v_) {
  if (u.is_zero() && v.is_zero()) {
    throw GeometryError(ErrorCode::InvalidArgument, "Shinagawa pair (0,0)");
  }
}

ShinagawaPair ShinagawaPair::normalized() const {
  const auto p = primitive(std::vector<Rational>{u, v});
  return ShinagawaPair(p[0], p[1]);
}

std::string ShinagawaPair::str() const { return "(" + u.str() + "," + v.str() + ")"; }

EulerParameter shinagawa_to_lambda(const ShinagawaPair& s) {
  return EulerParameter(s.u + s.v, Rational(3) * s.u + s.v);
}

ShinagawaPair lambda_to_shinagawa(const EulerParameter& lam) {
  // u : v = (den − num) : (3·num − den)
  return ShinagawaPair(lam.den() - lam.num(), Rational(3) * lam.num() - lam.den()).normalized();
}

std::ostream& operator<<(std::ostream& os, const EulerParameter& lam) { return os << lam.str(); }
std::ostream& operator<<(std::ostream& os, const ShinagawaPair& s) { return os << s.str(); }

}  // namespace eightconic
