#pragma once

#include <cstddef>
#include <vector>

#include "evoperm/algebra.hpp"

namespace evoperm::baric {

/// sigma(x) = c * x_{k0}, c != 0.
class WeightFunction {
 public:
  /// Throws ValidationError when c == 0 (characters are nonzero).
  WeightFunction(std::size_t k0, Rational c);

  std::size_t k0() const { return k0_; }
  const Rational& c() const { return c_; }

  Rational operator()(const Element& x) const { return c_ * x.coord(k0_); }

  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  std::size_t k0_;
  Rational c_;
};

/// All coordinate-supported characters, in increasing k0. A coordinate k0
/// qualifies when M[k0][k0] != 0 and every other entry of column k0 of the
/// structural matrix vanishes; then c = M[k0][k0]. This is cross-checked
/// against the fixed-point form of the criterion and a disagreement throws
/// std::logic_error.
std::vector<WeightFunction> find_weights(const PermEvolutionAlgebra& algebra);

/// sigma(e_i e_i) == sigma(e_i)^2 for every basis vector, which by
/// bilinearity decides multiplicativity on the whole algebra.
bool is_character(const PermEvolutionAlgebra& algebra, const WeightFunction& w);

}  // namespace evoperm::baric
