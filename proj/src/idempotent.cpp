#include "evoperm/idempotent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "evoperm/error.hpp"

namespace evoperm::idempotent {

namespace {

struct CubicCoefficients {
  Rational e3, e2, e1, e0;

  explicit CubicCoefficients(const CubicClassification& cls) {
    const Rational e = cls.b * cls.d - cls.a * cls.c;
    e3 = e * e;
    e2 = Rational{-2} * cls.b * e;
    e1 = cls.b * cls.b + cls.c * cls.d;
    e0 = -cls.c;
  }

  Rational eval(const Rational& x) const { return ((e3 * x + e2) * x + e1) * x + e0; }

  long double eval(long double x) const {
    return ((e3.to_long_double() * x + e2.to_long_double()) * x + e1.to_long_double()) * x + e0.to_long_double();
  }
  long double slope(long double x) const {
    return (3 * e3.to_long_double() * x + 2 * e2.to_long_double()) * x + e1.to_long_double();
  }
};

long double polish(const CubicCoefficients& f, long double x) {
  long double fx = std::fabs(f.eval(x));
  for (int it = 0; it < 4 && fx != 0; ++it) {
    const long double s = f.slope(x);
    if (s == 0) break;
    const long double next = x - f.eval(x) / s;
    const long double fn = std::fabs(f.eval(next));
    if (!(fn < fx)) break;
    x = next;
    fx = fn;
  }
  return x;
}

// Continued-fraction convergents of x, each tested exactly against the cubic.
std::optional<Rational> rational_root_near(const CubicCoefficients& f, long double x) {
  if (!std::isfinite(x) || std::fabs(x) > 1e12L) return std::nullopt;
  long long h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  long double v = x;
  for (int term = 0; term < 40; ++term) {
    const long double a = std::floor(v);
    if (std::fabs(a) > 1e15L) break;
    const long long ai = static_cast<long long>(a);
    const long long h = ai * h1 + h2;
    const long long k = ai * k1 + k2;
    if (k > 1000000000LL) break;
    if (std::fabs(x - static_cast<long double>(h) / k) <= 1e-12L * std::max<long double>(1, std::fabs(x))) {
      Rational cand(h, k);
      if (f.eval(cand).is_zero()) return cand;
    }
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    const long double frac = v - a;
    if (frac < 1e-18L) break;
    v = 1 / frac;
  }
  return std::nullopt;
}

IdempotentPoint exact_point(const PermEvolutionAlgebra& algebra, Element x, int multiplicity) {
  IdempotentPoint pt;
  for (const auto& c : x.coords()) pt.approx.push_back(c.to_double());
  if (!verify_idempotent(algebra, x)) throw std::logic_error("exact idempotent failed verification: " + x.str());
  pt.exact = std::move(x);
  pt.multiplicity = multiplicity;
  return pt;
}

}  // namespace

std::string to_string(CubicCase c) {
  switch (c) {
    case CubicCase::DegenerateLinear: return "degenerate-linear";
    case CubicCase::DegenerateOutside: return "degenerate-outside";
    case CubicCase::ThreeReal: return "three-real";
    case CubicCase::OneReal: return "one-real";
    case CubicCase::TwoReal: return "two-real";
    case CubicCase::OneRealTriple: return "one-real-triple";
  }
  return "?";
}

std::vector<QuadraticEquation> idempotent_system(const PermEvolutionAlgebra& algebra) {
  const Permutation j = algebra.j_map();
  std::vector<QuadraticEquation> out;
  for (std::size_t k = 1; k <= algebra.dim(); ++k)
    out.push_back({k, algebra.pi()(k), algebra.a_pi(k), j(k), algebra.a_tau(j(k))});
  return out;
}

CubicClassification classify_cubic(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  if (a.is_zero() || b.is_zero() || c.is_zero() || d.is_zero()) {
    throw PreconditionError("all four coefficients a, b, c, d must be nonzero");
  }
  CubicClassification cls{a, b, c, d};
  const Rational e = b * d - a * c;
  if (e.is_zero()) {
    cls.degenerate = true;
    cls.kind = (b * b + c * d).is_zero() ? CubicCase::DegenerateOutside : CubicCase::DegenerateLinear;
    return cls;
  }
  const Rational e2 = e * e;
  const Rational p = (Rational{3} * c * d - b * b) / (Rational{3} * e2);
  const Rational q = Rational{2} * (Rational{9} * b * c * d + b * b * b) / (Rational{27} * e2 * e) - c / e2;
  const Rational half_q = q / 2;
  const Rational third_p = p / 3;
  const Rational delta = half_q * half_q + third_p * third_p * third_p;
  cls.p = p;
  cls.q = q;
  cls.delta = delta;
  if (delta.sign() < 0) {
    cls.kind = CubicCase::ThreeReal;
  } else if (delta.sign() > 0) {
    cls.kind = CubicCase::OneReal;
  } else {
    cls.kind = p.is_zero() ? CubicCase::OneRealTriple : CubicCase::TwoReal;
  }
  return cls;
}

std::vector<CubicRoot> cubic_roots(const CubicClassification& cls) {
  std::vector<CubicRoot> roots;
  auto exact_root = [&](const Rational& x, int mult) { roots.push_back({x.to_long_double(), x, mult}); };

  switch (cls.kind) {
    case CubicCase::DegenerateLinear:
      exact_root(cls.c / (cls.b * cls.b + cls.c * cls.d), 1);
      return roots;
    case CubicCase::DegenerateOutside:
      return roots;
    default:
      break;
  }

  const Rational e = cls.b * cls.d - cls.a * cls.c;
  const Rational shift = Rational{2} * cls.b / (Rational{3} * e);
  const Rational& p = *cls.p;
  const Rational& q = *cls.q;

  if (cls.kind == CubicCase::OneRealTriple) {
    exact_root(shift, 3);
    return roots;
  }
  if (cls.kind == CubicCase::TwoReal) {
    exact_root(Rational{3} * q / p + shift, 1);
    exact_root(Rational{-3} * q / (Rational{2} * p) + shift, 2);
    std::sort(roots.begin(), roots.end(), [](const auto& l, const auto& r) { return *l.exact < *r.exact; });
    return roots;
  }

  const CubicCoefficients f(cls);
  const long double pl = p.to_long_double();
  const long double ql = q.to_long_double();
  const long double sl = shift.to_long_double();
  std::vector<long double> ts;
  if (cls.kind == CubicCase::ThreeReal) {
    const long double m = 2 * std::sqrt(-pl / 3);
    const long double arg = std::clamp<long double>(3 * ql / (2 * pl) * std::sqrt(-3 / pl), -1, 1);
    const long double theta = std::acos(arg);
    for (int k = 0; k < 3; ++k) ts.push_back(m * std::cos(theta / 3 - 2 * std::numbers::pi_v<long double> * k / 3));
  } else {
    const long double sd = std::sqrt(cls.delta->to_long_double());
    ts.push_back(std::cbrt(-ql / 2 + sd) + std::cbrt(-ql / 2 - sd));
  }
  for (long double t : ts) {
    const long double x = polish(f, t + sl);
    CubicRoot root{x};
    if (auto r = rational_root_near(f, x)) {
      root.value = r->to_long_double();
      root.exact = std::move(r);
    }
    roots.push_back(std::move(root));
  }
  std::sort(roots.begin(), roots.end(), [](const auto& l, const auto& r) { return l.value < r.value; });
  return roots;
}

IdempotentSet particular_idempotents(const PermEvolutionAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  IdempotentSet set;
  set.points.push_back(exact_point(algebra, Element::zero(n), 1));

  std::optional<Rational> common;
  bool uniform = true;
  for (const auto& eq : idempotent_system(algebra)) {
    const Rational sum = eq.own_coef + eq.partner_coef;
    if (!common) common = sum;
    uniform = uniform && sum == *common;
  }
  if (uniform && common && !common->is_zero()) {
    set.points.push_back(exact_point(algebra, Element(std::vector<Rational>(n, common->reciprocal())), 1));
    set.note = "particular solutions: zero and the uniform point 1/" + common->str();
  } else {
    set.note = "particular solutions: zero only (equation coefficient sums are not a common nonzero constant)";
  }
  return set;
}

bool is_two_dim_shape(const PermEvolutionAlgebra& algebra) {
  if (algebra.dim() != 2) return false;
  const Permutation swap{2, 1};
  return (algebra.pi() == swap && algebra.tau().is_identity()) ||
         (algebra.tau() == swap && algebra.pi().is_identity());
}

std::array<Rational, 4> two_dim_coefficients(const PermEvolutionAlgebra& algebra) {
  if (!is_two_dim_shape(algebra)) {
    throw PreconditionError("two-dimensional solver needs n = 2 with pi = (1 2) and tau = id");
  }
  if (algebra.pi().is_identity()) {
    return {algebra.a_tau(1), algebra.a_pi(2), algebra.a_tau(2), algebra.a_pi(1)};
  }
  return {algebra.a_pi(1), algebra.a_tau(2), algebra.a_pi(2), algebra.a_tau(1)};
}

IdempotentSet solve_n2(const PermEvolutionAlgebra& algebra) {
  const auto [a, b, c, d] = two_dim_coefficients(algebra);
  IdempotentSet set;
  set.classification = classify_cubic(a, b, c, d);
  set.complete = true;
  set.points.push_back(exact_point(algebra, Element::zero(2), 1));

  const Rational e = b * d - a * c;
  const long double al = a.to_long_double(), bl = b.to_long_double(), cl = c.to_long_double(),
                    dl = d.to_long_double(), el = e.to_long_double();

  for (const auto& root : cubic_roots(*set.classification)) {
    if (root.exact) {
      const Rational& x = *root.exact;
      const Rational y = (b * x - e * x * x) / c;
      set.points.push_back(exact_point(algebra, Element({x, y}), root.multiplicity));
      continue;
    }
    long double x = root.value;
    long double y = (bl * x - el * x * x) / cl;
    // Newton on the original pair of equations.
    for (int it = 0; it < 3; ++it) {
      const long double f1 = al * x * x + bl * y * y - y;
      const long double f2 = dl * x * x + cl * y * y - x;
      const long double j11 = 2 * al * x, j12 = 2 * bl * y - 1, j21 = 2 * dl * x - 1, j22 = 2 * cl * y;
      const long double det = j11 * j22 - j12 * j21;
      if (det == 0) break;
      const long double nx = x - (f1 * j22 - f2 * j12) / det;
      const long double ny = y - (j11 * f2 - j21 * f1) / det;
      const long double before = std::max(std::fabs(f1), std::fabs(f2));
      const long double after = std::max(std::fabs(al * nx * nx + bl * ny * ny - ny), std::fabs(dl * nx * nx + cl * ny * ny - nx));
      if (!(after < before)) break;
      x = nx;
      y = ny;
    }
    IdempotentPoint pt;
    pt.approx = {static_cast<double>(x), static_cast<double>(y)};
    pt.residual = static_cast<double>(idempotent_residual(algebra, pt.approx));
    pt.multiplicity = root.multiplicity;
    set.points.push_back(std::move(pt));
  }

  switch (set.classification->kind) {
    case CubicCase::DegenerateOutside:
      set.note = "bd = ac and b^2 + cd = 0: the quartic reduces to -c x = 0, only the zero idempotent";
      break;
    case CubicCase::OneReal:
      set.note = "one real cubic root; the complex-conjugate pair gives no real idempotent";
      break;
    case CubicCase::TwoReal:
      set.note = "delta = 0: one simple and one double cubic root";
      break;
    default:
      break;
  }
  return set;
}

bool verify_idempotent(const PermEvolutionAlgebra& algebra, const Element& x) { return square(algebra, x) == x; }

long double idempotent_residual(const PermEvolutionAlgebra& algebra, std::span<const double> x) {
  const std::size_t n = algebra.dim();
  std::vector<long double> sq(n, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    const long double xi = x[i - 1];
    sq[algebra.pi()(i) - 1] += algebra.a_pi(i).to_long_double() * xi * xi;
    sq[algebra.tau()(i) - 1] += algebra.a_tau(i).to_long_double() * xi * xi;
  }
  long double worst = 0;
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::fabs(sq[i] - static_cast<long double>(x[i])));
  return worst;
}

}  // namespace evoperm::idempotent
