#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "evoperm/rational.hpp"

namespace evoperm {

/// Dense row-major matrix of exact rationals. Entry access is 0-based.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  RationalMatrix transpose() const;
  RationalMatrix submatrix(std::span<const std::size_t> row_ids,
                           std::span<const std::size_t> col_ids) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact determinant. Rows are scaled to integers and eliminated with
/// Bareiss' fraction-free scheme. Throws std::invalid_argument if not square.
Rational det(const RationalMatrix& m);

/// Exact rank over the rationals.
std::size_t rank(const RationalMatrix& m);

/// Expression of a rank-r homogeneous system S u = 0 in solved form.
///
/// The first r linearly independent rows of S (scanning top to bottom) are
/// kept. Among them the lexicographically first independent columns become
/// the pivot (dependent) variables; the remaining columns are free. Then for
/// every pivot row i and free column j,
///
///     u[pivot_cols[i]] = -sum_j coefficients(i, j) * u[free_cols[j]],
///
/// and coefficients(i, j) = det(M_ij) / det(M_r), where M_r is the selected
/// rows restricted to the pivot columns and M_ij is M_r with its i-th column
/// replaced by free column j. All indices are 0-based.
struct ReducedSystem {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> free_cols;
  RationalMatrix coefficients;

  /// M_r.
  RationalMatrix leading_minor(const RationalMatrix& s) const;
  /// M_ij: leading minor with pivot column i replaced by free column j.
  RationalMatrix replaced_minor(const RationalMatrix& s, std::size_t i, std::size_t j) const;
};

/// Throws PreconditionError if rank(s) != r.
ReducedSystem reduced_coefficients(const RationalMatrix& s, std::size_t r);

/// coefficient * sqrt(radicand), radicand a square-free nonnegative integer
/// (1 when the value is rational). Zero is 0 * sqrt(1).
struct SqrtRational {
  Rational coefficient{0};
  Rational radicand{1};

  /// The exact square coefficient^2 * radicand.
  Rational squared() const { return coefficient * coefficient * radicand; }
  long double to_long_double() const;

  /// "c" when the radicand is 1, otherwise "c*sqrt(r)".
  std::string str() const;
  static SqrtRational parse(std::string_view text);

  friend bool operator==(const SqrtRational&, const SqrtRational&) = default;
};

/// sqrt(v) in normalized form. Throws std::domain_error for negative v.
SqrtRational sqrt_normalize(const Rational& v);

}  // namespace evoperm
