#include "evoperm/algebra.hpp"

#include <sstream>
#include <stdexcept>

#include "evoperm/error.hpp"

namespace evoperm {

Element Element::basis(std::size_t n, std::size_t i) {
  Element e = zero(n);
  e.coord(i) = 1;
  return e;
}

bool Element::is_zero() const {
  for (const auto& x : coords_)
    if (!x.is_zero()) return false;
  return true;
}

std::string Element::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ", " : "") << coords_[i];
  os << ')';
  return os.str();
}

PermEvolutionAlgebra::PermEvolutionAlgebra(Unchecked, Permutation pi, Permutation tau,
                                           std::vector<Rational> a_pi, std::vector<Rational> a_tau)
    : pi_(std::move(pi)), tau_(std::move(tau)), a_pi_(std::move(a_pi)), a_tau_(std::move(a_tau)) {
  if (pi_.degree() != tau_.degree()) {
    throw ValidationError("pi has degree " + std::to_string(pi_.degree()) + " but tau has degree " +
                          std::to_string(tau_.degree()));
  }
  if (a_pi_.size() != dim() || a_tau_.size() != dim()) {
    throw ValidationError("coefficient vectors must have length " + std::to_string(dim()));
  }
}

PermEvolutionAlgebra::PermEvolutionAlgebra(Permutation pi, Permutation tau, std::vector<Rational> a_pi,
                                           std::vector<Rational> a_tau)
    : PermEvolutionAlgebra(Unchecked{}, std::move(pi), std::move(tau), std::move(a_pi), std::move(a_tau)) {
  if (pi_ == tau_) throw ValidationError("pi and tau must differ");
}

PermEvolutionAlgebra PermEvolutionAlgebra::block(Permutation pi, Permutation tau, std::vector<Rational> a_pi,
                                                 std::vector<Rational> a_tau) {
  return PermEvolutionAlgebra(Unchecked{}, std::move(pi), std::move(tau), std::move(a_pi), std::move(a_tau));
}

Permutation PermEvolutionAlgebra::j_map() const { return compose(inverse(tau_), pi_); }

RationalMatrix PermEvolutionAlgebra::structural_matrix() const {
  const std::size_t n = dim();
  RationalMatrix m(n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    m(i - 1, pi_(i) - 1) += a_pi(i);
    m(i - 1, tau_(i) - 1) += a_tau(i);
  }
  return m;
}

RationalMatrix PermEvolutionAlgebra::system_matrix() const { return structural_matrix().transpose(); }

Element multiply(const PermEvolutionAlgebra& algebra, const Element& x, const Element& y) {
  const std::size_t n = algebra.dim();
  if (x.dim() != n || y.dim() != n) throw std::invalid_argument("element dimension does not match algebra");
  Element out = Element::zero(n);
  for (std::size_t i = 1; i <= n; ++i) {
    Rational w = x.coord(i) * y.coord(i);
    if (w.is_zero()) continue;
    out.coord(algebra.pi()(i)) += w * algebra.a_pi(i);
    out.coord(algebra.tau()(i)) += w * algebra.a_tau(i);
  }
  return out;
}

Element square(const PermEvolutionAlgebra& algebra, const Element& x) {
  const std::size_t n = algebra.dim();
  if (x.dim() != n) throw std::invalid_argument("element dimension does not match algebra");
  const Permutation j = algebra.j_map();
  Element out = Element::zero(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const Rational& xk = x.coord(k);
    const Rational& xj = x.coord(j(k));
    out.coord(algebra.pi()(k)) = algebra.a_pi(k) * xk * xk + algebra.a_tau(j(k)) * xj * xj;
  }
  return out;
}

}  // namespace evoperm
