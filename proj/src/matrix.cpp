#include "evoperm/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "evoperm/error.hpp"

namespace evoperm {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::submatrix(std::span<const std::size_t> row_ids,
                                         std::span<const std::size_t> col_ids) const {
  RationalMatrix s(row_ids.size(), col_ids.size());
  for (std::size_t r = 0; r < row_ids.size(); ++r)
    for (std::size_t c = 0; c < col_ids.size(); ++c) s(r, c) = (*this)(row_ids[r], col_ids[c]);
  return s;
}

namespace {

using IntGrid = std::vector<std::vector<mpz_class>>;

// Scales every row by the lcm of its denominators. Returns the product of the
// scale factors.
mpz_class to_integer_rows(const RationalMatrix& m, IntGrid& out) {
  out.assign(m.rows(), std::vector<mpz_class>(m.cols()));
  mpz_class scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (const Rational& x : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.value().get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& x = m(r, c).value();
      out[r][c] = x.get_num() * (l / x.get_den());
    }
    scale *= l;
  }
  return scale;
}

// Fraction-free forward elimination. Returns the rank; `sign` tracks row swaps
// and `last_pivot` the final Bareiss pivot (the determinant when square and
// full rank).
std::size_t bareiss(IntGrid& a, std::size_t cols, int& sign, mpz_class& last_pivot) {
  const std::size_t rows = a.size();
  sign = 1;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  last_pivot = prev;
  return r;
}

// Subtracts multiples of the echelon rows from v; returns the index of the
// first nonzero entry of the remainder or v.size() if it vanished.
std::size_t reduce_against(std::vector<Rational>& v,
                           const std::vector<std::pair<std::size_t, std::vector<Rational>>>& basis) {
  for (const auto& [pc, b] : basis) {
    if (v[pc].is_zero()) continue;
    Rational f = v[pc];
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * b[j];
  }
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero()) return j;
  return v.size();
}

}  // namespace

Rational det(const RationalMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntGrid a;
  mpz_class scale = to_integer_rows(m, a);
  int sign = 1;
  mpz_class pivot;
  if (bareiss(a, m.cols(), sign, pivot) < m.rows()) return 0;
  return Rational(mpq_class(mpz_class(sign * pivot), scale));
}

std::size_t rank(const RationalMatrix& m) {
  IntGrid a;
  to_integer_rows(m, a);
  int sign = 1;
  mpz_class pivot;
  return bareiss(a, m.cols(), sign, pivot);
}

ReducedSystem reduced_coefficients(const RationalMatrix& s, std::size_t r) {
  const std::size_t n = s.cols();
  ReducedSystem out;

  // Lexicographically first independent rows.
  std::vector<std::pair<std::size_t, std::vector<Rational>>> basis;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    std::vector<Rational> v(s.row(i).begin(), s.row(i).end());
    std::size_t lead = reduce_against(v, basis);
    if (lead == n) continue;
    Rational inv = v[lead].reciprocal();
    for (auto& x : v) x *= inv;
    basis.emplace_back(lead, std::move(v));
    out.rows.push_back(i);
  }
  if (out.rows.size() != r) {
    throw PreconditionError("rank mismatch: system has rank " + std::to_string(out.rows.size()) +
                            ", expected " + std::to_string(r));
  }

  // Gauss-Jordan on the kept rows; pivots land on the first independent columns.
  RationalMatrix e = s.submatrix(out.rows, [&] {
    std::vector<std::size_t> all(n);
    for (std::size_t j = 0; j < n; ++j) all[j] = j;
    return all;
  }());
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < r; ++c) {
    std::size_t p = row;
    while (p < r && e(p, c).is_zero()) ++p;
    if (p == r) {
      out.free_cols.push_back(c);
      continue;
    }
    if (p != row)
      for (std::size_t j = 0; j < n; ++j) std::swap(e(p, j), e(row, j));
    Rational inv = e(row, c).reciprocal();
    for (std::size_t j = 0; j < n; ++j) e(row, j) *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || e(i, c).is_zero()) continue;
      Rational f = e(i, c);
      for (std::size_t j = 0; j < n; ++j) e(i, j) -= f * e(row, j);
    }
    out.pivot_cols.push_back(c);
    ++row;
  }
  for (std::size_t c = out.pivot_cols.empty() ? 0 : out.pivot_cols.back() + 1; c < n; ++c)
    out.free_cols.push_back(c);

  out.coefficients = RationalMatrix(r, out.free_cols.size());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < out.free_cols.size(); ++j) out.coefficients(i, j) = e(i, out.free_cols[j]);
  return out;
}

RationalMatrix ReducedSystem::leading_minor(const RationalMatrix& s) const {
  return s.submatrix(rows, pivot_cols);
}

RationalMatrix ReducedSystem::replaced_minor(const RationalMatrix& s, std::size_t i, std::size_t j) const {
  std::vector<std::size_t> cols = pivot_cols;
  cols.at(i) = free_cols.at(j);
  return s.submatrix(rows, cols);
}

long double SqrtRational::to_long_double() const {
  return coefficient.to_long_double() * std::sqrt(radicand.to_long_double());
}

std::string SqrtRational::str() const {
  if (radicand == Rational{1}) return coefficient.str();
  return coefficient.str() + "*sqrt(" + radicand.str() + ")";
}

SqrtRational SqrtRational::parse(std::string_view text) {
  constexpr std::string_view marker = "*sqrt(";
  auto pos = text.find(marker);
  if (pos == std::string_view::npos) return {Rational::parse(text), 1};
  if (text.back() != ')') throw ParseError("malformed square-root term '" + std::string(text) + "'");
  std::string_view inner = text.substr(pos + marker.size());
  inner.remove_suffix(1);
  return {Rational::parse(text.substr(0, pos)), Rational::parse(inner)};
}

SqrtRational sqrt_normalize(const Rational& v) {
  if (v.sign() < 0) throw std::domain_error("square root of a negative rational");
  if (v.is_zero()) return {0, 1};

  // sqrt(p/q) = sqrt(p*q)/q; split p*q = s^2 * f with f square-free.
  mpz_class m = v.numerator() * v.denominator();
  mpz_class s = 1;
  mpz_class f = 1;
  for (mpz_class d = 2; d * d * d <= m; ++d) {
    mpz_class d2 = d * d;
    while (mpz_divisible_p(m.get_mpz_t(), d2.get_mpz_t())) {
      m /= d2;
      s *= d;
    }
    if (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
      m /= d;
      f *= d;
    }
  }
  // What remains has no prime factor below its cube root: it is 1, a prime,
  // a product of two distinct primes, or a prime squared.
  if (mpz_perfect_square_p(m.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
    s *= root;
  } else {
    f *= m;
  }
  return {Rational(mpq_class(s, v.denominator())), Rational(mpq_class(f))};
}

}  // namespace evoperm
