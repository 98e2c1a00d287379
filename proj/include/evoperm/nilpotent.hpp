#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "evoperm/algebra.hpp"
#include "evoperm/matrix.hpp"

// Absolute nilpotents: elements with x^2 = 0.
//
// Writing u_i = x_i^2 >= 0, the condition is linear in u and splits along the
// cycles (l_1 .. l_p) of the j-map k -> tau^{-1}(pi(k)). On one cycle it reads
//
//     a_pi[l_k] u_{l_k} + a_tau[l_{k+1}] u_{l_{k+1}} = 0,   k = 1..p, l_{p+1} = l_1,
//
// so every equation links two neighbours on a ring.
namespace evoperm::nilpotent {

/// left_coef * u_left + right_coef * u_right = 0; this is coordinate `target`
/// of x^2. For a 1-cycle left == right and the two terms add.
struct SquareEquation {
  std::size_t target = 0;
  std::size_t left = 0;
  Rational left_coef;
  std::size_t right = 0;
  Rational right_coef;

  friend bool operator==(const SquareEquation&, const SquareEquation&) = default;
};

/// Equation k links cycle[k] and cycle[k+1 mod p].
struct CycleSystem {
  std::vector<std::size_t> cycle;
  std::vector<SquareEquation> equations;
};

std::vector<CycleSystem> squared_system(const PermEvolutionAlgebra& algebra);

enum class SolutionKind {
  TrivialOnly,     ///< every coordinate on the cycle vanishes
  FreeCoordinate,  ///< isolated coordinates with both coefficients zero are arbitrary, the rest vanish
  OneParamFamily,  ///< |x_{l_k}| = r_k |x_{l_1}| around the whole cycle
  SegmentFamilies  ///< the ring breaks into independent chains, each a one-parameter family
};

/// One ray of the solution cone in u-space: |x_{support[k]}| = ratios[k] * t
/// for a free parameter t, every other coordinate zero. ratios[0] == 1.
struct Family {
  std::vector<std::size_t> support;
  std::vector<SqrtRational> ratios;

  friend bool operator==(const Family&, const Family&) = default;
};

struct CycleSolution {
  std::vector<std::size_t> cycle;
  SolutionKind kind = SolutionKind::TrivialOnly;
  std::vector<Family> families;
  /// Only squares are constrained, so each nonzero coordinate takes either sign.
  bool sign_freedom = false;
  std::string note;

  /// Coordinates that are arbitrary on their own (FreeCoordinate kind).
  std::vector<std::size_t> free_coordinates() const;

  friend bool operator==(const CycleSolution&, const CycleSolution&) = default;
};

enum class Criterion { Nonsingular, CorankOneMinors, SignProducts, CorankTwoCoefficients };
enum class Verdict { Certified, NotCertified, Inapplicable };

std::string to_string(SolutionKind kind);
std::string to_string(Criterion criterion);
std::string to_string(Verdict verdict);

/// Minors behind the corank-one test, reported in original variable indices
/// (1-based): pivot_variable plays the role of i0 and free_variable of n.
struct MinorPair {
  std::size_t pivot_variable = 0;
  std::size_t free_variable = 0;
  Rational replaced_det;  ///< det(M_{i0 n})
  Rational leading_det;   ///< det(M_{n-1})

  Rational product() const { return replaced_det * leading_det; }
  friend bool operator==(const MinorPair&, const MinorPair&) = default;
};

/// Outcome of one sufficient condition for uniqueness of the zero nilpotent.
struct CriterionResult {
  Criterion criterion = Criterion::Nonsingular;
  Verdict verdict = Verdict::Inapplicable;
  std::string reason;
  std::optional<MinorPair> minors;
  /// Corank-two: the dependent variable whose row has both coefficients > 0.
  std::optional<std::size_t> certifying_variable;

  bool certifies() const { return verdict == Verdict::Certified; }
  friend bool operator==(const CriterionResult&, const CriterionResult&) = default;
};

struct NilpotentReport {
  std::vector<CycleSolution> per_cycle;
  /// True iff zero is the only absolute nilpotent.
  bool unique = true;
  std::vector<CriterionResult> criteria;

  std::vector<Criterion> criteria_fired() const;
  friend bool operator==(const NilpotentReport&, const NilpotentReport&) = default;
};

/// Solves one cycle of the squared system exactly.
CycleSolution solve_cycle(const CycleSystem& system);

/// Complete description of the absolute nilpotents, plus all four
/// uniqueness criteria.
NilpotentReport solve(const PermEvolutionAlgebra& algebra);

/// det(system matrix) != 0.
CriterionResult uniqueness_by_det(const PermEvolutionAlgebra& algebra);
/// det = 0, rank = n-1 and det(M_{i0 n}) det(M_{n-1}) > 0 for some i0.
CriterionResult uniqueness_rank_n1(const PermEvolutionAlgebra& algebra);
/// a_{k pi(k)} a_{j_k pi(k)} > 0 for every k.
CriterionResult uniqueness_sign(const PermEvolutionAlgebra& algebra);
/// det = 0, rank = n-2 and some row of the reduced coefficients is positive
/// in both entries.
CriterionResult uniqueness_rank_n2(const PermEvolutionAlgebra& algebra);

/// Index of the first row of a two-column coefficient matrix with both
/// entries > 0.
std::optional<std::size_t> positive_row(const RationalMatrix& coefficients);

/// Exact two-variable cone test: is there (u, v) >= 0, (u, v) != 0 with
/// d_i1 u + d_i2 v <= 0 for every row i? Throws std::invalid_argument unless
/// the matrix has two columns.
bool cone_oracle(const RationalMatrix& coefficients);

/// Exact check x^2 = 0.
bool verify_nilpotent(const PermEvolutionAlgebra& algebra, const Element& x);

/// Checks a vector of squares u (u_i = x_i^2): u >= 0 and every equation of
/// the system holds exactly.
bool verify_squares(const PermEvolutionAlgebra& algebra, const std::vector<Rational>& u);

/// Squares of the family member with parameter t: u_{support[k]} = ratios[k]^2 * t^2.
std::vector<Rational> square_witness(std::size_t dim, const Family& family, const Rational& t_squared = 1);

}  // namespace evoperm::nilpotent
