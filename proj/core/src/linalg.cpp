#include "eightconic/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace eightconic {

Rational dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 scale(const Vec3& v, const Rational& s) { return {v[0] * s, v[1] * s, v[2] * s}; }
Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
bool is_zero(const Vec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

Rational det(const Mat3& m) { return dot(m[0], cross(m[1], m[2])); }

Mat3 adjugate(const Mat3& m) {
  // Columns of the adjugate are the cross products of row pairs.
  const Vec3 c0 = cross(m[1], m[2]);
  const Vec3 c1 = cross(m[2], m[0]);
  const Vec3 c2 = cross(m[0], m[1]);
  return {Vec3{c0[0], c1[0], c2[0]}, Vec3{c0[1], c1[1], c2[1]}, Vec3{c0[2], c1[2], c2[2]}};
}

Mat3 transpose(const Mat3& m) {
  Mat3 t;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return t;
}

Mat3 multiply(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  return r;
}

Vec3 multiply(const Mat3& m, const Vec3& v) { return {dot(m[0], v), dot(m[1], v), dot(m[2], v)}; }

Mat3 identity3() {
  return {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

namespace {

struct Elimination {
  Matrix m;
  std::vector<std::size_t> pivot_cols;
  int swap_sign = 1;
};

// Bareiss step: a_ij <- (p * a_ij - a_ic * a_rj) / prev. Every division is
// exact (entries stay minors of the input).
Elimination bareiss(Matrix m) {
  Elimination out;
  Rational prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
      out.swap_sign = -out.swap_sign;
    }
    const Rational pivot = m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Rational lead = m(i, c);
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        m(i, j) = (pivot * m(i, j) - lead * m(r, j)) / prev;
      }
      m(i, c) = 0;
    }
    prev = pivot;
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

Integer lcm_of_denominators(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.denominator());
  return l;
}

}  // namespace

EchelonForm bareiss_echelon(const Matrix& m) {
  Matrix scaled = m;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) l = lcm(l, m(r, c).denominator());
    const Rational factor(l);
    for (std::size_t c = 0; c < m.cols(); ++c) scaled(r, c) *= factor;
  }
  Elimination e = bareiss(std::move(scaled));
  return {std::move(e.m), std::move(e.pivot_cols)};
}

std::vector<std::vector<Rational>> nullspace(const Matrix& m) {
  const EchelonForm ef = bareiss_echelon(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : ef.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(n);
    x[free] = 1;
    for (std::size_t k = ef.rank(); k-- > 0;) {
      const std::size_t pc = ef.pivot_cols[k];
      Rational acc;
      for (std::size_t j = pc + 1; j < n; ++j) {
        if (!x[j].is_zero()) acc += ef.reduced(k, j) * x[j];
      }
      x[pc] = -acc / ef.reduced(k, pc);
    }
    basis.push_back(primitive(x));
  }
  return basis;
}

std::size_t rank(const Matrix& m) { return bareiss(m).pivot_cols.size(); }

std::size_t rank(const Mat3& m) {
  Matrix mm(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) mm(i, j) = m[i][j];
  return rank(mm);
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  const Elimination e = bareiss(m);
  if (e.pivot_cols.size() < m.rows()) return 0;
  const std::size_t last = m.rows() - 1;
  return e.swap_sign > 0 ? e.m(last, last) : -e.m(last, last);
}

std::vector<Rational> primitive(const std::vector<Rational>& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x.numerator());
  if (g == 0) return v;
  const Integer l = lcm_of_denominators(v);
  Rational factor(l, g);
  for (const auto& x : v) {
    if (!x.is_zero()) {
      if (x.sign() < 0) factor = -factor;
      break;
    }
  }
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x * factor);
  return out;
}

Vec3 primitive(const Vec3& v) {
  const auto p = primitive(std::vector<Rational>(v.begin(), v.end()));
  return {p[0], p[1], p[2]};
}

}  // namespace eightconic
