#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evoperm/algebra.hpp"

namespace evoperm::idempotent {

/// own_coef * x_k^2 + partner_coef * x_partner^2 = x_target, where
/// target = pi(k) and partner = j_k = tau^{-1}(pi(k)).
struct QuadraticEquation {
  std::size_t k = 0;
  std::size_t target = 0;
  Rational own_coef;
  std::size_t partner = 0;
  Rational partner_coef;

  friend bool operator==(const QuadraticEquation&, const QuadraticEquation&) = default;
};

/// The n equations of x^2 = x, one per k.
std::vector<QuadraticEquation> idempotent_system(const PermEvolutionAlgebra& algebra);

enum class CubicCase {
  DegenerateLinear,   ///< bd = ac, b^2 + cd != 0: one nonzero root c / (b^2 + cd)
  DegenerateOutside,  ///< bd = ac, b^2 + cd = 0: no nonzero root
  ThreeReal,          ///< delta < 0
  OneReal,            ///< delta > 0, plus a complex-conjugate pair
  TwoReal,            ///< delta = 0, p != 0: a simple and a double root
  OneRealTriple       ///< p = q = 0: triple root 2b / (3(bd - ac))
};

std::string to_string(CubicCase c);

/// Root structure of the cubic factor
///
///     (bd-ac)^2 x^3 - 2b(bd-ac) x^2 + (b^2+cd) x - c
///
/// of the elimination quartic for the two-dimensional system
/// a x^2 + b y^2 = y, d x^2 + c y^2 = x. After shifting x = t + 2b/(3(bd-ac))
/// it becomes t^3 + p t + q with
///
///     p = (3cd - b^2) / (3(bd-ac)^2),
///     q = 2(9bcd + b^3) / (27(bd-ac)^3) - c / (bd-ac)^2,
///
/// and the sign of delta = (q/2)^2 + (p/3)^3 decides the real root count.
struct CubicClassification {
  Rational a, b, c, d;
  bool degenerate = false;
  std::optional<Rational> p, q, delta;
  CubicCase kind = CubicCase::DegenerateLinear;

  friend bool operator==(const CubicClassification&, const CubicClassification&) = default;
};

/// Exact classification. Throws PreconditionError if any coefficient is zero.
CubicClassification classify_cubic(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

/// A real root of the cubic factor; exact when it is rational.
struct CubicRoot {
  long double value = 0;
  std::optional<Rational> exact;
  int multiplicity = 1;
};

/// The distinct real roots of the cubic factor, in increasing order.
std::vector<CubicRoot> cubic_roots(const CubicClassification& cls);

struct IdempotentPoint {
  std::vector<double> approx;
  std::optional<Element> exact;
  /// Max-norm of x^2 - x; exactly 0 for exact points.
  double residual = 0;
  /// Multiplicity of the originating cubic root (1 for the zero point).
  int multiplicity = 1;

  friend bool operator==(const IdempotentPoint&, const IdempotentPoint&) = default;
};

struct IdempotentSet {
  std::vector<IdempotentPoint> points;
  bool includes_zero = true;
  std::optional<CubicClassification> classification;
  /// True only when the points are all idempotents of the algebra.
  bool complete = false;
  std::string note;

  friend bool operator==(const IdempotentSet&, const IdempotentSet&) = default;
};

/// Zero, plus (1/d, ..., 1/d) when every equation's coefficients sum to the
/// same d != 0. Never complete.
IdempotentSet particular_idempotents(const PermEvolutionAlgebra& algebra);

/// True for n = 2 with {pi, tau} = {(1 2), id}.
bool is_two_dim_shape(const PermEvolutionAlgebra& algebra);

/// Renamed coefficients (a, b, c, d) = (a_12, a_22, a_21, a_11) of the
/// two-dimensional algebra. Throws PreconditionError for the wrong shape.
std::array<Rational, 4> two_dim_coefficients(const PermEvolutionAlgebra& algebra);

/// Every real idempotent of a two-dimensional algebra with nonzero
/// coefficients. Throws PreconditionError otherwise.
IdempotentSet solve_n2(const PermEvolutionAlgebra& algebra);

inline constexpr double kResidualTolerance = 1e-9;

bool verify_idempotent(const PermEvolutionAlgebra& algebra, const Element& x);
/// Max-norm of x^2 - x evaluated in extended precision.
long double idempotent_residual(const PermEvolutionAlgebra& algebra, std::span<const double> x);

}  // namespace evoperm::idempotent
