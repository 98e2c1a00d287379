#pragma once

#include <array>
#include <cstddef>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "evoperm/algebra.hpp"

// Brute-force checks that share no solving code with the analytic modules:
// a separate elimination routine, a separate root finder.
namespace evoperm::oracle {

enum class Method { ExactElimination, ConeAnalysis, GridSample, NumericRoots };

std::string to_string(Method m);

struct SearchReport {
  std::string instance;
  Method method = Method::ConeAnalysis;
  /// The whole search space was covered (exact methods only).
  bool exhausted = false;
  /// Nilpotent search: extreme rays of {u >= 0 : S u = 0}, each scaled so its
  /// first nonzero entry is 1.
  std::vector<std::vector<Rational>> rays;
  /// Idempotent search: real solutions (x, y).
  std::vector<std::array<double, 2>> points;

  bool nontrivial() const { return !rays.empty(); }
};

inline constexpr std::size_t kMaxNilpotentDim = 12;

/// Decides whether x^2 = 0 has a nonzero solution by enumerating supports T:
/// every extreme ray of the cone {u >= 0 : S u = 0} is the one-dimensional
/// kernel of the columns S[:, T], generated by a strictly positive vector.
/// Throws PreconditionError when dim > 12.
SearchReport nilpotent_oracle(const PermEvolutionAlgebra& algebra);

/// All real solutions of a x^2 + b y^2 = y, d x^2 + c y^2 = x from the
/// companion-matrix roots of the elimination quartic, with y taken from
/// y^2 = (x - d x^2) / c and filtered by residual. Throws PreconditionError
/// on a zero coefficient.
SearchReport idempotent_search_n2(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

/// Distinct real roots of sum_k coeffs[k] x^(deg-k) (highest degree first,
/// leading zeros dropped), from companion-matrix eigenvalues polished by
/// Newton steps. Roots closer than `separation` are merged.
std::vector<long double> real_polynomial_roots(std::vector<long double> coeffs, long double separation = 1e-7L);

enum class Equation { Nilpotent, Idempotent };

/// Max-norm of x^2 (nilpotent) or x^2 - x (idempotent), exact.
Rational substitution_residual(const PermEvolutionAlgebra& algebra, const Element& x, Equation eq);
/// Same, evaluated in extended precision for floating coordinates.
long double substitution_residual(const PermEvolutionAlgebra& algebra, std::span<const double> x, Equation eq);

/// Uniformly random pi != tau of degree n (n >= 2) with coefficients drawn
/// from the pool.
PermEvolutionAlgebra random_algebra(std::mt19937_64& rng, std::size_t n, std::span<const Rational> pool);

Permutation random_permutation(std::mt19937_64& rng, std::size_t n);

}  // namespace evoperm::oracle
