#include "evoperm/structure.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "evoperm/error.hpp"

namespace evoperm::structure {

namespace {

void require_nonzero_coefficients(const PermEvolutionAlgebra& a) {
  for (std::size_t i = 1; i <= a.dim(); ++i) {
    if ((a.a_pi(i) * a.a_tau(i)).is_zero()) {
      throw PreconditionError("coefficient a_pi[" + std::to_string(i) + "] * a_tau[" + std::to_string(i) +
                              "] is zero");
    }
  }
}

std::string support_str(std::vector<std::size_t> s) {
  std::sort(s.begin(), s.end());
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < s.size(); ++k) os << (k ? "," : "") << s[k];
  os << '}';
  return os.str();
}

// Relabels `algebra` through e'_i = e_{map(i)}; requires the map to carry
// pi and tau onto permutations of 1..k.
PermEvolutionAlgebra transport(const PermEvolutionAlgebra& a, const BasisMap& map, bool allow_equal) {
  const std::size_t k = map.target_dim;
  std::vector<std::size_t> local(a.dim() + 1, 0);
  for (std::size_t i = 1; i <= k; ++i) local[map(i)] = i;
  std::vector<std::size_t> pi(k), tau(k);
  std::vector<Rational> a_pi(k), a_tau(k);
  for (std::size_t i = 1; i <= k; ++i) {
    const std::size_t s = map(i);
    pi[i - 1] = local[a.pi()(s)];
    tau[i - 1] = local[a.tau()(s)];
    a_pi[i - 1] = a.a_pi(s);
    a_tau[i - 1] = a.a_tau(s);
  }
  if (allow_equal) {
    return PermEvolutionAlgebra::block(Permutation(std::move(pi)), Permutation(std::move(tau)), std::move(a_pi),
                                       std::move(a_tau));
  }
  return PermEvolutionAlgebra(Permutation(std::move(pi)), Permutation(std::move(tau)), std::move(a_pi),
                              std::move(a_tau));
}

BasisMap orbit_map(const PermEvolutionAlgebra& a) {
  BasisMap map{a.dim(), a.dim(), {}};
  std::size_t x = 1;
  for (std::size_t i = 0; i < a.dim(); ++i, x = a.pi()(x)) map.assignment.push_back(x);
  return map;
}

}  // namespace

bool BasisMap::is_bijective() const {
  if (source_dim != target_dim || assignment.size() != target_dim) return false;
  std::vector<bool> hit(source_dim + 1, false);
  for (std::size_t s : assignment) {
    if (s < 1 || s > source_dim || hit[s]) return false;
    hit[s] = true;
  }
  return true;
}

Decomposition decompose(const PermEvolutionAlgebra& algebra) {
  require_nonzero_coefficients(algebra);
  const std::size_t n = algebra.dim();

  // Label every point with the least element of its tau-cycle, then check
  // each pi-cycle lies in exactly one tau-cycle of the same size.
  std::vector<std::size_t> tau_owner(n + 1, 0);
  std::map<std::size_t, std::vector<std::size_t>> tau_support;
  for (const auto& c : cycles(algebra.tau()).cycles) {
    for (std::size_t x : c) tau_owner[x] = c.front();
    tau_support[c.front()] = c;
  }

  Decomposition out;
  for (const auto& c : cycles(algebra.pi()).cycles) {
    const std::size_t owner = tau_owner[c.front()];
    const auto& tc = tau_support[owner];
    bool same = tc.size() == c.size();
    for (std::size_t x : c) same = same && tau_owner[x] == owner;
    if (!same) {
      throw PreconditionError("cycle supports interleave: pi cycle " + support_str(c) + " vs tau cycle " +
                              support_str(tc));
    }
    BasisMap map{n, c.size(), c};
    out.blocks.push_back({c, transport(algebra, map, true), map});
  }
  return out;
}

PermEvolutionAlgebra reassemble(const Decomposition& decomposition) {
  std::size_t n = 0;
  for (const auto& b : decomposition.blocks) n += b.support.size();
  std::vector<std::size_t> pi(n, 0), tau(n, 0);
  std::vector<Rational> a_pi(n), a_tau(n);
  for (const auto& b : decomposition.blocks) {
    for (std::size_t i = 1; i <= b.algebra.dim(); ++i) {
      const std::size_t s = b.map(i);
      pi[s - 1] = b.map(b.algebra.pi()(i));
      tau[s - 1] = b.map(b.algebra.tau()(i));
      a_pi[s - 1] = b.algebra.a_pi(i);
      a_tau[s - 1] = b.algebra.a_tau(i);
    }
  }
  return PermEvolutionAlgebra::block(Permutation(std::move(pi)), Permutation(std::move(tau)), std::move(a_pi),
                                     std::move(a_tau));
}

CanonicalForm canonical_cycle_identity(const PermEvolutionAlgebra& algebra) {
  if (!algebra.pi().is_full_cycle()) throw PreconditionError("pi is not a single n-cycle");
  if (!algebra.tau().is_identity()) throw PreconditionError("tau is not the identity");
  require_nonzero_coefficients(algebra);
  BasisMap map = orbit_map(algebra);
  return {transport(algebra, map, false), std::move(map)};
}

CanonicalForm canonical_inverse_pair(const PermEvolutionAlgebra& algebra) {
  if (!algebra.pi().is_full_cycle()) throw PreconditionError("pi is not a single n-cycle");
  if (algebra.tau() != inverse(algebra.pi())) throw PreconditionError("tau is not pi^-1");
  require_nonzero_coefficients(algebra);
  BasisMap map = orbit_map(algebra);
  return {transport(algebra, map, false), std::move(map)};
}

bool verify_isomorphism(const PermEvolutionAlgebra& source, const PermEvolutionAlgebra& target,
                        const BasisMap& map) {
  if (source.dim() != target.dim() || map.source_dim != source.dim() || map.target_dim != target.dim()) {
    throw std::invalid_argument("isomorphism check needs equal dimensions");
  }
  if (!map.is_bijective()) throw std::invalid_argument("basis map is not a bijection");
  return verify_embedding(source, Block{map.assignment, target, map});
}

bool verify_embedding(const PermEvolutionAlgebra& parent, const Block& block) {
  const std::size_t n = parent.dim();
  const std::size_t k = block.algebra.dim();
  // Off-diagonal products vanish in every evolution algebra; only the squares
  // of basis vectors carry information.
  for (std::size_t i = 1; i <= k; ++i) {
    const Element lhs = multiply(parent, Element::basis(n, block.map(i)), Element::basis(n, block.map(i)));
    const Element local = multiply(block.algebra, Element::basis(k, i), Element::basis(k, i));
    Element pushed = Element::zero(n);
    for (std::size_t j = 1; j <= k; ++j) pushed.coord(block.map(j)) += local.coord(j);
    if (lhs != pushed) return false;
  }
  return true;
}

Element pull_back(const BasisMap& map, const Element& x) {
  std::vector<Rational> y(map.target_dim);
  for (std::size_t i = 1; i <= map.target_dim; ++i) y[i - 1] = x.coord(map(i));
  return Element(std::move(y));
}

}  // namespace evoperm::structure
