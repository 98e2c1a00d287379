#include "evoperm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "evoperm/error.hpp"

namespace evoperm::oracle {

namespace {

using Grid = std::vector<std::vector<Rational>>;

// Kernel of an m x t matrix when it is one-dimensional, else empty.
std::vector<Rational> one_dim_kernel(Grid a, std::size_t t) {
  const std::size_t m = a.size();
  std::vector<std::size_t> pivot_of_col(t, m);
  std::size_t row = 0;
  for (std::size_t c = 0; c < t && row < m; ++c) {
    std::size_t p = row;
    while (p < m && a[p][c].is_zero()) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    const Rational inv = a[row][c].reciprocal();
    for (auto& v : a[row]) v *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < t; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_of_col[c] = row++;
  }
  if (t - row != 1) return {};
  std::size_t free = 0;
  while (pivot_of_col[free] != m) ++free;
  std::vector<Rational> v(t);
  v[free] = 1;
  for (std::size_t c = 0; c < t; ++c)
    if (pivot_of_col[c] != m) v[c] = -a[pivot_of_col[c]][free];
  return v;
}

long double horner(const std::vector<long double>& c, long double x) {
  long double acc = 0;
  for (long double k : c) acc = acc * x + k;
  return acc;
}

long double horner_slope(const std::vector<long double>& c, long double x) {
  long double acc = 0;
  const std::size_t deg = c.size() - 1;
  for (std::size_t k = 0; k < deg; ++k) acc = acc * x + c[k] * static_cast<long double>(deg - k);
  return acc;
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::ExactElimination: return "exact-elimination";
    case Method::ConeAnalysis: return "cone-analysis";
    case Method::GridSample: return "grid-sample";
    case Method::NumericRoots: return "numeric-roots";
  }
  return "?";
}

SearchReport nilpotent_oracle(const PermEvolutionAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  if (n > kMaxNilpotentDim) {
    throw PreconditionError("nilpotent oracle is capped at dimension " + std::to_string(kMaxNilpotentDim));
  }
  // Column i holds the coordinates of e_i^2.
  Grid s(n, std::vector<Rational>(n));
  for (std::size_t i = 1; i <= n; ++i) {
    s[algebra.pi()(i) - 1][i - 1] += algebra.a_pi(i);
    s[algebra.tau()(i) - 1][i - 1] += algebra.a_tau(i);
  }

  SearchReport report;
  report.instance = "pi=" + algebra.pi().str() + " tau=" + algebra.tau().str();
  report.method = Method::ConeAnalysis;
  report.exhausted = true;

  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < n; ++c)
      if (mask >> c & 1) cols.push_back(c);
    Grid sub(n, std::vector<Rational>(cols.size()));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < cols.size(); ++k) sub[r][k] = s[r][cols[k]];
    std::vector<Rational> v = one_dim_kernel(std::move(sub), cols.size());
    if (v.empty()) continue;
    const int sign = v.front().sign();
    bool strict = sign != 0;
    for (const auto& x : v) strict = strict && x.sign() == sign;
    if (!strict) continue;
    const Rational scale = v.front().reciprocal();
    std::vector<Rational> ray(n);
    for (std::size_t k = 0; k < cols.size(); ++k) ray[cols[k]] = v[k] * scale;
    report.rays.push_back(std::move(ray));
  }
  std::sort(report.rays.begin(), report.rays.end());
  return report;
}

std::vector<long double> real_polynomial_roots(std::vector<long double> coeffs, long double separation) {
  while (!coeffs.empty() && coeffs.front() == 0) coeffs.erase(coeffs.begin());
  std::vector<long double> roots;
  if (coeffs.size() < 2) return roots;
  const std::size_t deg = coeffs.size() - 1;

  // Trailing zero coefficients are exact roots at 0.
  std::size_t zeros = 0;
  while (zeros < deg && coeffs[deg - zeros] == 0) ++zeros;
  if (zeros > 0) roots.push_back(0);
  std::vector<long double> reduced(coeffs.begin(), coeffs.end() - static_cast<std::ptrdiff_t>(zeros));
  const std::size_t rdeg = reduced.size() - 1;

  auto scale_at = [&](long double x) {
    long double scale = 0;
    for (std::size_t k = 0; k <= rdeg; ++k)
      scale += std::fabs(reduced[k]) * std::pow(std::max<long double>(1, std::fabs(x)), static_cast<long double>(rdeg - k));
    return scale;
  };
  auto polish = [](const std::vector<long double>& p, long double x, int steps) {
    for (int it = 0; it < steps; ++it) {
      const long double s = horner_slope(p, x);
      if (s == 0) break;
      const long double next = x - horner(p, x) / s;
      if (!(std::fabs(horner(p, next)) < std::fabs(horner(p, x)))) break;
      x = next;
    }
    return x;
  };

  if (rdeg > 0) {
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rdeg), static_cast<Eigen::Index>(rdeg));
    for (std::size_t k = 0; k < rdeg; ++k)
      companion(0, static_cast<Eigen::Index>(k)) = static_cast<double>(-reduced[k + 1] / reduced[0]);
    for (std::size_t k = 1; k < rdeg; ++k)
      companion(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k - 1)) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    std::vector<std::complex<double>> eig(solver.eigenvalues().begin(), solver.eigenvalues().end());
    std::sort(eig.begin(), eig.end(), [](auto l, auto r) { return l.real() < r.real(); });

    // A root of multiplicity k shows up as k eigenvalues spread by about
    // eps^(1/k), some of them complex. Such a cluster is refined as the simple
    // root of the (k-1)-th derivative and kept only if it zeroes the
    // polynomial to working precision; otherwise its members are tried alone.
    std::vector<bool> used(eig.size(), false);
    for (std::size_t i = 0; i < eig.size(); ++i) {
      if (used[i]) continue;
      std::vector<std::size_t> cluster{i};
      for (std::size_t j = i + 1; j < eig.size(); ++j)
        if (!used[j] && std::abs(eig[j] - eig[i]) <= 1e-4 * std::max(1.0, std::abs(eig[i]))) cluster.push_back(j);
      if (cluster.size() > 1) {
        std::complex<double> centre = 0;
        for (std::size_t j : cluster) centre += eig[j];
        centre /= static_cast<double>(cluster.size());
        std::vector<long double> deriv = reduced;
        for (std::size_t d = 1; d < cluster.size(); ++d) {
          std::vector<long double> next(deriv.size() - 1);
          const std::size_t dd = deriv.size() - 1;
          for (std::size_t k = 0; k < next.size(); ++k) next[k] = deriv[k] * static_cast<long double>(dd - k);
          deriv = std::move(next);
        }
        const long double x = polish(deriv, centre.real(), 30);
        if (std::fabs(horner(reduced, x)) <= 1e-15L * scale_at(x)) {
          for (std::size_t j : cluster) used[j] = true;
          roots.push_back(x);
          continue;
        }
      }
      used[i] = true;
      if (std::abs(eig[i].imag()) > 1e-6 * std::max(1.0, std::abs(eig[i]))) continue;
      const long double x = polish(reduced, eig[i].real(), 8);
      if (std::fabs(horner(reduced, x)) > 1e-9L * scale_at(x)) continue;
      roots.push_back(x);
    }
  }
  std::sort(roots.begin(), roots.end());
  std::vector<long double> distinct;
  for (long double r : roots)
    if (distinct.empty() || std::fabs(r - distinct.back()) > separation * std::max<long double>(1, std::fabs(r)))
      distinct.push_back(r);
  return distinct;
}

SearchReport idempotent_search_n2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  if (a.is_zero() || b.is_zero() || c.is_zero() || d.is_zero()) {
    throw PreconditionError("all four coefficients a, b, c, d must be nonzero");
  }
  const Rational e = b * d - a * c;
  // (bd-ac)^2 x^4 - 2b(bd-ac) x^3 + (b^2+cd) x^2 - c x
  std::vector<long double> quartic = {(e * e).to_long_double(), (Rational{-2} * b * e).to_long_double(),
                                      (b * b + c * d).to_long_double(), (-c).to_long_double(), 0};

  SearchReport report;
  report.instance = "a=" + a.str() + " b=" + b.str() + " c=" + c.str() + " d=" + d.str();
  report.method = Method::NumericRoots;
  report.exhausted = false;

  const long double al = a.to_long_double(), bl = b.to_long_double(), cl = c.to_long_double(),
                    dl = d.to_long_double();
  for (long double x : real_polynomial_roots(quartic)) {
    const long double y2 = (x - dl * x * x) / cl;
    if (y2 < -1e-9L) continue;
    const long double root = std::sqrt(std::max<long double>(0, y2));
    for (long double y : {root, -root}) {
      const long double r = std::max(std::fabs(al * x * x + bl * y * y - y), std::fabs(dl * x * x + cl * y * y - x));
      if (r > 1e-9L) continue;
      std::array<double, 2> pt{static_cast<double>(x), static_cast<double>(y)};
      if (std::find(report.points.begin(), report.points.end(), pt) == report.points.end()) report.points.push_back(pt);
    }
  }
  return report;
}

Rational substitution_residual(const PermEvolutionAlgebra& algebra, const Element& x, Equation eq) {
  const std::size_t n = algebra.dim();
  std::vector<Rational> sq(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const Rational w = x.coord(i) * x.coord(i);
    sq[algebra.pi()(i) - 1] += algebra.a_pi(i) * w;
    sq[algebra.tau()(i) - 1] += algebra.a_tau(i) * w;
  }
  Rational worst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational r = eq == Equation::Idempotent ? sq[i] - x.coords()[i] : sq[i];
    worst = std::max(worst, r.abs());
  }
  return worst;
}

long double substitution_residual(const PermEvolutionAlgebra& algebra, std::span<const double> x, Equation eq) {
  const std::size_t n = algebra.dim();
  std::vector<long double> sq(n, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    const long double w = static_cast<long double>(x[i - 1]) * x[i - 1];
    sq[algebra.pi()(i) - 1] += algebra.a_pi(i).to_long_double() * w;
    sq[algebra.tau()(i) - 1] += algebra.a_tau(i).to_long_double() * w;
  }
  long double worst = 0;
  for (std::size_t i = 0; i < n; ++i)
    worst = std::max(worst, std::fabs(eq == Equation::Idempotent ? sq[i] - x[i] : sq[i]));
  return worst;
}

Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{1});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

PermEvolutionAlgebra random_algebra(std::mt19937_64& rng, std::size_t n, std::span<const Rational> pool) {
  if (n < 2) throw PreconditionError("random algebras need n >= 2");
  Permutation pi = random_permutation(rng, n);
  Permutation tau = random_permutation(rng, n);
  while (tau == pi) tau = random_permutation(rng, n);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<Rational> a_pi(n), a_tau(n);
  for (auto& x : a_pi) x = pool[pick(rng)];
  for (auto& x : a_tau) x = pool[pick(rng)];
  return PermEvolutionAlgebra(std::move(pi), std::move(tau), std::move(a_pi), std::move(a_tau));
}

}  // namespace evoperm::oracle
