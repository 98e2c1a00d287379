#include "evoperm/baric.hpp"

#include <optional>
#include <stdexcept>

#include "evoperm/error.hpp"

namespace evoperm::baric {

namespace {

// Fixed-point form: k0 is fixed by pi or tau (or both), the coefficient that
// lands on e_{k0} from k0 itself is nonzero, and the coefficient carried into
// e_{k0} by the preimage under the non-fixing permutation is zero.
std::optional<Rational> weight_from_fixed_point(const PermEvolutionAlgebra& a, std::size_t k0) {
  const bool pi_fixes = a.pi()(k0) == k0;
  const bool tau_fixes = a.tau()(k0) == k0;
  if (pi_fixes && tau_fixes) {
    Rational c = a.a_pi(k0) + a.a_tau(k0);
    if (c.is_zero()) return std::nullopt;
    return c;
  }
  if (pi_fixes) {
    if (a.a_pi(k0).is_zero() || !a.a_tau(inverse(a.tau())(k0)).is_zero()) return std::nullopt;
    return a.a_pi(k0);
  }
  if (tau_fixes) {
    if (a.a_tau(k0).is_zero() || !a.a_pi(inverse(a.pi())(k0)).is_zero()) return std::nullopt;
    return a.a_tau(k0);
  }
  return std::nullopt;
}

}  // namespace

WeightFunction::WeightFunction(std::size_t k0, Rational c) : k0_(k0), c_(std::move(c)) {
  if (c_.is_zero()) throw ValidationError("weight function with zero coefficient");
}

std::vector<WeightFunction> find_weights(const PermEvolutionAlgebra& algebra) {
  const RationalMatrix m = algebra.structural_matrix();
  const std::size_t n = algebra.dim();
  std::vector<WeightFunction> out;
  for (std::size_t k0 = 1; k0 <= n; ++k0) {
    const Rational& diag = m(k0 - 1, k0 - 1);
    bool column_ok = !diag.is_zero();
    for (std::size_t i = 1; i <= n && column_ok; ++i)
      if (i != k0 && !m(i - 1, k0 - 1).is_zero()) column_ok = false;

    const auto combinatorial = weight_from_fixed_point(algebra, k0);
    if (column_ok != combinatorial.has_value() || (column_ok && *combinatorial != diag)) {
      throw std::logic_error("weight criteria disagree at k0 = " + std::to_string(k0));
    }
    if (column_ok) out.emplace_back(k0, diag);
  }
  return out;
}

bool is_character(const PermEvolutionAlgebra& algebra, const WeightFunction& w) {
  const RationalMatrix m = algebra.structural_matrix();
  for (std::size_t i = 1; i <= algebra.dim(); ++i) {
    const Rational image = w.c() * m(i - 1, w.k0() - 1);
    const Rational expected = i == w.k0() ? w.c() * w.c() : Rational{0};
    if (image != expected) return false;
  }
  return true;
}

}  // namespace evoperm::baric
