#pragma once

// Helpers shared by the test binaries: random inputs and reference
// implementations that deliberately avoid the library's own algorithms.

#include <algorithm>
#include <random>
#include <vector>

#include "evoperm/algebra.hpp"
#include "evoperm/matrix.hpp"
#include "evoperm/oracle.hpp"

namespace evoperm::testing {

inline Rational random_rational(std::mt19937_64& rng, long lo, long hi, long max_den = 1) {
  std::uniform_int_distribution<long> num(lo * max_den, hi * max_den);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Rational random_nonzero(std::mt19937_64& rng, long lo, long hi, long max_den = 1) {
  for (;;) {
    Rational r = random_rational(rng, lo, hi, max_den);
    if (!r.is_zero()) return r;
  }
}

inline std::vector<Rational> integer_pool(long lo, long hi) {
  std::vector<Rational> pool;
  for (long v = lo; v <= hi; ++v) pool.emplace_back(v);
  return pool;
}

inline RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound = 3) {
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_rational(rng, -bound, bound, 3);
  return m;
}

/// Laplace expansion along the first row.
inline Rational cofactor_det(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j)
      if (j != c) cols.push_back(j);
    const Rational term = m(0, c) * cofactor_det(m.submatrix(rows, cols));
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

/// Largest k with a nonzero k x k minor, by exhaustive search.
inline std::size_t minor_rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t k = std::min(rows, cols); k > 0; --k) {
    for (unsigned rmask = 0; rmask < (1u << rows); ++rmask) {
      if (static_cast<std::size_t>(__builtin_popcount(rmask)) != k) continue;
      for (unsigned cmask = 0; cmask < (1u << cols); ++cmask) {
        if (static_cast<std::size_t>(__builtin_popcount(cmask)) != k) continue;
        std::vector<std::size_t> rs, cs;
        for (std::size_t i = 0; i < rows; ++i)
          if (rmask >> i & 1u) rs.push_back(i);
        for (std::size_t j = 0; j < cols; ++j)
          if (cmask >> j & 1u) cs.push_back(j);
        if (!cofactor_det(m.submatrix(rs, cs)).is_zero()) return k;
      }
    }
  }
  return 0;
}

/// Structure constants straight from the definition, independent of
/// PermEvolutionAlgebra::structural_matrix.
inline std::vector<std::vector<Rational>> definition_table(const PermEvolutionAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<std::vector<Rational>> t(n, std::vector<Rational>(n));
  for (std::size_t i = 1; i <= n; ++i) {
    t[i - 1][a.pi()(i) - 1] += a.a_pi(i);
    t[i - 1][a.tau()(i) - 1] += a.a_tau(i);
  }
  return t;
}

/// x*y computed from the table, independent of multiply().
inline Element table_product(const PermEvolutionAlgebra& a, const Element& x, const Element& y) {
  const auto t = definition_table(a);
  Element out = Element::zero(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out.coord(j + 1) += x.coords()[i] * y.coords()[i] * t[i][j];
  return out;
}

inline Element random_element(std::mt19937_64& rng, std::size_t n, long bound = 3) {
  std::vector<Rational> v(n);
  for (auto& x : v) x = random_rational(rng, -bound, bound, 4);
  return Element(v);
}

/// Coordinate characters sigma(x) = c x_k found by trying every k and every c
/// in `candidates` against all basis products.
inline std::vector<std::pair<std::size_t, Rational>> brute_weights(const PermEvolutionAlgebra& a,
                                                                   const std::vector<Rational>& candidates) {
  const std::size_t n = a.dim();
  std::vector<std::pair<std::size_t, Rational>> found;
  for (std::size_t k = 1; k <= n; ++k) {
    for (const auto& c : candidates) {
      if (c.is_zero()) continue;
      bool ok = true;
      for (std::size_t i = 1; i <= n && ok; ++i)
        for (std::size_t j = 1; j <= n && ok; ++j) {
          const auto prod = table_product(a, Element::basis(n, i), Element::basis(n, j));
          const Rational lhs = c * prod.coord(k);
          const Rational rhs = (i == k ? c : Rational(0)) * (j == k ? c : Rational(0));
          ok = lhs == rhs;
        }
      if (ok) found.emplace_back(k, c);
    }
  }
  return found;
}

/// Number of fixed points meeting the baric conditions read literally off
/// the fixed-point criterion: k fixed by exactly one of pi, tau with a_kk != 0
/// and the other permutation's preimage of k contributing nothing, or fixed
/// by both with a nonzero combined coefficient.
inline std::size_t fixed_point_weight_count(const PermEvolutionAlgebra& a) {
  std::size_t count = 0;
  const auto pi_inv = inverse(a.pi()), tau_inv = inverse(a.tau());
  for (std::size_t k = 1; k <= a.dim(); ++k) {
    const bool fp = a.pi()(k) == k, ft = a.tau()(k) == k;
    if (fp && ft) {
      if (!(a.a_pi(k) + a.a_tau(k)).is_zero()) ++count;
    } else if (fp) {
      if (!a.a_pi(k).is_zero() && a.a_tau(tau_inv(k)).is_zero()) ++count;
    } else if (ft) {
      if (!a.a_tau(k).is_zero() && a.a_pi(pi_inv(k)).is_zero()) ++count;
    }
  }
  return count;
}

/// pi and tau built on the same random set partition, each part a single
/// cycle for both, with nonzero coefficients. Degree n >= 3 so that pi != tau
/// can be arranged.
inline PermEvolutionAlgebra random_matched_support(std::mt19937_64& rng, std::size_t n, long bound = 3) {
  for (;;) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i + 1;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::vector<std::size_t>> pi_cycles, tau_cycles;
    std::uniform_int_distribution<std::size_t> cut(1, n);
    for (std::size_t start = 0; start < n;) {
      const std::size_t len = std::min(n - start, cut(rng));
      std::vector<std::size_t> part(order.begin() + start, order.begin() + start + len);
      pi_cycles.push_back(part);
      std::shuffle(part.begin() + (part.empty() ? 0 : 1), part.end(), rng);
      tau_cycles.push_back(part);
      start += len;
    }
    const auto pi = Permutation::from_cycles(n, pi_cycles), tau = Permutation::from_cycles(n, tau_cycles);
    if (pi == tau) continue;
    std::vector<Rational> a_pi(n), a_tau(n);
    for (auto& x : a_pi) x = random_nonzero(rng, -bound, bound, 2);
    for (auto& x : a_tau) x = random_nonzero(rng, -bound, bound, 2);
    return PermEvolutionAlgebra(pi, tau, a_pi, a_tau);
  }
}

/// A random single n-cycle.
inline Permutation random_full_cycle(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i + 1;
  std::shuffle(order.begin(), order.end(), rng);
  return Permutation::from_cycles(n, {order});
}

inline std::vector<Rational> random_nonzero_vector(std::mt19937_64& rng, std::size_t n, long bound = 3) {
  std::vector<Rational> v(n);
  for (auto& x : v) x = random_nonzero(rng, -bound, bound, 2);
  return v;
}

/// e_i^2 of `target` pushed through the relabeling equals e_{map(i)}^2 in
/// `source`, compared through the definition tables.
inline bool squares_transported(const PermEvolutionAlgebra& source, const PermEvolutionAlgebra& target,
                                const std::vector<std::size_t>& assignment) {
  const auto ts = definition_table(target), ss = definition_table(source);
  for (std::size_t i = 0; i < target.dim(); ++i) {
    std::vector<Rational> pushed(source.dim());
    for (std::size_t j = 0; j < target.dim(); ++j) pushed[assignment[j] - 1] += ts[i][j];
    if (pushed != ss[assignment[i] - 1]) return false;
  }
  return true;
}

}  // namespace evoperm::testing
