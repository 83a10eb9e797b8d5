#include "eightconic/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "eightconic/errors.hpp"

namespace eightconic {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::FrameMismatch: return "FrameMismatch";
    case ErrorCode::WrongFrame: return "WrongFrame";
    case ErrorCode::SamePoint: return "SamePoint";
    case ErrorCode::SameLine: return "SameLine";
    case ErrorCode::NotCollinear: return "NotCollinear";
    case ErrorCode::TooManyCoincident: return "TooManyCoincident";
    case ErrorCode::Collinear: return "Collinear";
    case ErrorCode::PointAtInfinity: return "PointAtInfinity";
    case ErrorCode::Coincident: return "Coincident";
    case ErrorCode::EquilateralFrame: return "EquilateralFrame";
    case ErrorCode::OnSideline: return "OnSideline";
    case ErrorCode::NotUnique: return "NotUnique";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::VertexInput: return "VertexInput";
    case ErrorCode::DegenerateAllZero: return "DegenerateAllZero";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::LineOnConic: return "LineOnConic";
    case ErrorCode::ThroughVertex: return "ThroughVertex";
    case ErrorCode::SamplingFailed: return "SamplingFailed";
    case ErrorCode::PassesThroughA: return "PassesThroughA";
    case ErrorCode::NotThroughBC: return "NotThroughBC";
    case ErrorCode::IsogonalUndefined: return "IsogonalUndefined";
    case ErrorCode::DegenerateQuadrilateral: return "DegenerateQuadrilateral";
    case ErrorCode::EquilateralSubtriangle: return "EquilateralSubtriangle";
    case ErrorCode::NonConvexOrder: return "NonConvexOrder";
    case ErrorCode::NoGeneralPositionFive: return "NoGeneralPositionFive";
    case ErrorCode::NotOnEulerLine: return "NotOnEulerLine";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool parse_integer(std::string_view text, Integer* out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out->set_str(digits, 10) == 0;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, &num)) {
      throw GeometryError(ErrorCode::InvalidArgument, "not a rational: '" + std::string(text) + "'");
    }
  } else {
    const auto den_text = text.substr(slash + 1);
    if (!parse_integer(text.substr(0, slash), &num) || den_text.empty() ||
        den_text[0] == '-' || den_text[0] == '+' || !parse_integer(den_text, &den)) {
      throw GeometryError(ErrorCode::InvalidArgument, "not a rational: '" + std::string(text) + "'");
    }
    if (den == 0) {
      throw GeometryError(ErrorCode::InvalidArgument, "zero denominator: '" + std::string(text) + "'");
    }
  }
  return Rational(num, den);
}

Rational Rational::abs() const {
  Rational r;
  r.q_ = ::abs(q_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Rational r;
  r.q_ = 1 / q_;
  return r;
}

std::string Rational::str() const { return q_.get_str(10); }

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational operator-(const Rational& a) {
  Rational r;
  r.q_ = -a.q_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::string to_decimal(const Rational& r, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;

  const Integer num = r.numerator() * scale;
  const Integer den = r.denominator();
  const bool negative = num < 0;
  const Integer mag = negative ? Integer(-num) : num;

  Integer q;
  Integer rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), mag.get_mpz_t(), den.get_mpz_t());
  const int half = cmp(Integer(2 * rem), den);
  if (half > 0 || (half == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

  std::string int_digits = q.get_str(10);
  if (static_cast<int>(int_digits.size()) <= digits) {
    int_digits.insert(0, static_cast<std::size_t>(digits + 1) - int_digits.size(), '0');
  }
  std::string out;
  if (negative && q != 0) out.push_back('-');
  out += int_digits.substr(0, int_digits.size() - static_cast<std::size_t>(digits));
  if (digits > 0) {
    out.push_back('.');
    out += int_digits.substr(int_digits.size() - static_cast<std::size_t>(digits));
  }
  return out;
}

bool rational_sqrt(const Rational& r, Rational* root) {
  if (r.sign() < 0) return false;
  const Integer num = r.numerator();
  const Integer den = r.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return false;
  }
  if (root != nullptr) *root = Rational(Integer(sqrt(num)), Integer(sqrt(den)));
  return true;
}

ExtendedRational parse_extended(std::string_view text) {
  if (text == "inf" || text == "∞" || text == "infinity") return Infinity{};
  return Rational::parse(text);
}

std::string to_string(const ExtendedRational& v) {
  if (is_infinite(v)) return "inf";
  return std::get<Rational>(v).str();
}

}  // namespace eightconic
