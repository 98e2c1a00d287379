#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "evoperm/matrix.hpp"
#include "evoperm/perm.hpp"
#include "evoperm/rational.hpp"

namespace evoperm {

/// An element sum_i x_i e_i of an n-dimensional algebra, coordinates in the
/// natural basis. coord(i) is 1-indexed.
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  static Element zero(std::size_t n) { return Element(std::vector<Rational>(n)); }
  /// e_i, 1-indexed.
  static Element basis(std::size_t n, std::size_t i);

  std::size_t dim() const { return coords_.size(); }
  const Rational& coord(std::size_t i) const { return coords_[i - 1]; }
  Rational& coord(std::size_t i) { return coords_[i - 1]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  std::string str() const;

  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::vector<Rational> coords_;
};

/// Evolution algebra whose basis squares are
///
///     e_i * e_i = a_pi[i] e_{pi(i)} + a_tau[i] e_{tau(i)},   e_i * e_j = 0 (i != j).
///
/// The two coefficient vectors are the source of truth. When pi(i) == tau(i)
/// both coefficients land on the same structural entry and add up.
class PermEvolutionAlgebra {
 public:
  /// Throws ValidationError on degree/length mismatch or when pi == tau.
  PermEvolutionAlgebra(Permutation pi, Permutation tau, std::vector<Rational> a_pi,
                       std::vector<Rational> a_tau);

  /// Same as the constructor but permits pi == tau. Used for the summands of
  /// a direct-sum decomposition, where a block may carry equal restrictions.
  static PermEvolutionAlgebra block(Permutation pi, Permutation tau, std::vector<Rational> a_pi,
                                    std::vector<Rational> a_tau);

  std::size_t dim() const { return pi_.degree(); }
  const Permutation& pi() const { return pi_; }
  const Permutation& tau() const { return tau_; }
  /// a_{i pi(i)}, 1-indexed.
  const Rational& a_pi(std::size_t i) const { return a_pi_[i - 1]; }
  /// a_{i tau(i)}, 1-indexed.
  const Rational& a_tau(std::size_t i) const { return a_tau_[i - 1]; }
  const std::vector<Rational>& a_pi() const { return a_pi_; }
  const std::vector<Rational>& a_tau() const { return a_tau_; }

  /// k -> tau^{-1}(pi(k)). Its cycles decouple the equations for x^2 = 0.
  Permutation j_map() const;

  /// M with e_i^2 = sum_j M(i-1, j-1) e_j.
  RationalMatrix structural_matrix() const;
  /// Transpose of M: row j-1 lists the coefficients of the equation
  /// sum_i M_ij x_i^2 = (x^2)_j.
  RationalMatrix system_matrix() const;

  friend bool operator==(const PermEvolutionAlgebra&, const PermEvolutionAlgebra&) = default;

 private:
  struct Unchecked {};
  PermEvolutionAlgebra(Unchecked, Permutation pi, Permutation tau, std::vector<Rational> a_pi,
                       std::vector<Rational> a_tau);

  Permutation pi_;
  Permutation tau_;
  std::vector<Rational> a_pi_;
  std::vector<Rational> a_tau_;
};

/// x * y = sum_i x_i y_i (e_i * e_i). Throws std::invalid_argument on a
/// dimension mismatch.
Element multiply(const PermEvolutionAlgebra& algebra, const Element& x, const Element& y);

/// x^2, evaluated through the regrouping by target coordinate:
/// (x^2)_{pi(k)} = a_pi[k] x_k^2 + a_tau[j_k] x_{j_k}^2.
Element square(const PermEvolutionAlgebra& algebra, const Element& x);

}  // namespace evoperm
