#include "doctest.h"

#include <cmath>

#include "evoperm/error.hpp"
#include "evoperm/idempotent.hpp"
#include "support.hpp"

using namespace evoperm;
using namespace evoperm::idempotent;

namespace {

/// a x^2 + b y^2 = y, d x^2 + c y^2 = x.
PermEvolutionAlgebra plane(Rational a, Rational b, Rational c, Rational d) {
  return PermEvolutionAlgebra({2, 1}, {1, 2}, {a, c}, {d, b});
}

std::size_t numeric_root_count(const CubicClassification& k) {
  const Rational e = k.b * k.d - k.a * k.c;
  const std::vector<long double> coeffs{(e * e).to_long_double(), (Rational(-2) * k.b * e).to_long_double(),
                                        (k.b * k.b + k.c * k.d).to_long_double(), (-k.c).to_long_double()};
  return oracle::real_polynomial_roots(coeffs).size();
}

}  // namespace

TEST_CASE("two-dimensional system") {
  const auto sys = idempotent_system(plane(2, 3, 5, 7));
  REQUIRE(sys.size() == 2);
  // k = 1: a_12 x_1^2 + a_22 x_2^2 = x_2.
  CHECK(sys[0] == QuadraticEquation{1, 2, 2, 2, 3});
  CHECK(sys[1] == QuadraticEquation{2, 1, 5, 1, 7});
  CHECK(two_dim_coefficients(plane(2, 3, 5, 7)) == std::array<Rational, 4>{2, 3, 5, 7});
  // The swapped labelling pi = id, tau = (1 2) names the same four numbers.
  const PermEvolutionAlgebra swapped({1, 2}, {2, 1}, {7, 3}, {2, 5});
  CHECK(two_dim_coefficients(swapped) == std::array<Rational, 4>{2, 3, 5, 7});
  CHECK_THROWS_AS(two_dim_coefficients(PermEvolutionAlgebra({2, 3, 1}, {1, 2, 3}, {1, 1, 1}, {1, 1, 1})),
                  PreconditionError);
}

TEST_CASE("particular solutions") {
  const auto zero = particular_idempotents(PermEvolutionAlgebra({2, 3, 1}, {1, 2, 3}, {0, 0, 0}, {0, 0, 0}));
  REQUIRE(zero.points.size() == 1);
  CHECK(zero.points[0].exact->is_zero());
  CHECK_FALSE(zero.complete);

  const auto ones = particular_idempotents(PermEvolutionAlgebra({2, 3, 1}, {1, 3, 2}, {1, 1, 1}, {1, 1, 1}));
  REQUIRE(ones.points.size() == 2);
  CHECK(*ones.points[1].exact == Element({Rational(1, 2), Rational(1, 2), Rational(1, 2)}));

  const auto uneven = particular_idempotents(PermEvolutionAlgebra({2, 3, 1}, {1, 2, 3}, {1, 2, 1}, {1, 1, 1}));
  CHECK(uneven.points.size() == 1);
  CHECK_FALSE(uneven.complete);
}

TEST_CASE("cubic classification, worked cases") {
  const auto ones = classify_cubic(1, 1, 1, 1);
  CHECK(ones.degenerate);
  CHECK(ones.kind == CubicCase::DegenerateLinear);
  CHECK_FALSE(ones.delta.has_value());
  const auto r1 = cubic_roots(ones);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].exact == Rational(1, 2));

  const auto k = classify_cubic(1, 1, 1, 2);
  CHECK(*k.p == Rational(5, 3));
  CHECK(*k.q == Rational(11, 27));
  CHECK(*k.delta == Rational(621, 2916));
  CHECK(k.kind == CubicCase::OneReal);

  const auto triple = classify_cubic(Rational(1, 64), 3, 8, Rational(3, 8));
  CHECK(triple.kind == CubicCase::OneRealTriple);
  const auto r3 = cubic_roots(triple);
  REQUIRE(r3.size() == 1);
  CHECK(r3[0].exact == Rational(2));
  CHECK(r3[0].multiplicity == 3);

  // (x - 1)^2 (x - 3) after scaling.
  const auto two = classify_cubic(Rational(-1, 8), Rational(5, 2), 3, Rational(1, 4));
  CHECK(two.kind == CubicCase::TwoReal);
  const auto r2 = cubic_roots(two);
  REQUIRE(r2.size() == 2);
  CHECK(r2[0].exact == Rational(1));
  CHECK(r2[0].multiplicity == 2);
  CHECK(r2[1].exact == Rational(3));
  CHECK(r2[1].multiplicity == 1);

  const auto outside = classify_cubic(-1, 1, 1, -1);
  CHECK(outside.kind == CubicCase::DegenerateOutside);
  CHECK(cubic_roots(outside).empty());

  CHECK_THROWS_AS(classify_cubic(0, 1, 1, 1), PreconditionError);
}

TEST_CASE("all-ones plane has exactly two idempotents") {
  const auto s = solve_n2(plane(1, 1, 1, 1));
  CHECK(s.complete);
  REQUIRE(s.points.size() == 2);
  CHECK(*s.points[0].exact == Element({0, 0}));
  CHECK(*s.points[1].exact == Element({Rational(1, 2), Rational(1, 2)}));
  CHECK(verify_idempotent(plane(1, 1, 1, 1), Element({Rational(1, 2), Rational(1, 2)})));
  CHECK_FALSE(verify_idempotent(plane(1, 1, 1, 1), Element({1, 1})));
  CHECK(verify_idempotent(plane(1, 1, 1, 1), Element({0, 0})));
  CHECK_THROWS_AS(solve_n2(plane(0, 1, 1, 1)), PreconditionError);
}

TEST_CASE("double root gives distinct exact points") {
  const auto a = plane(Rational(-1, 8), Rational(5, 2), 3, Rational(1, 4));
  const auto s = solve_n2(a);
  REQUIRE(s.points.size() == 3);
  CHECK(*s.points[1].exact == Element({1, Rational(1, 2)}));
  CHECK(s.points[1].multiplicity == 2);
  CHECK(*s.points[2].exact == Element({3, Rational(-1, 2)}));
}

TEST_CASE("three real roots") {
  // Search a small grid for a negative discriminant.
  std::mt19937_64 rng(61);
  bool found = false;
  for (int trial = 0; trial < 2000 && !found; ++trial) {
    const Rational a = evoperm::testing::random_nonzero(rng, -3, 3, 2), b = evoperm::testing::random_nonzero(rng, -3, 3, 2),
                   c = evoperm::testing::random_nonzero(rng, -3, 3, 2), d = evoperm::testing::random_nonzero(rng, -3, 3, 2);
    const auto k = classify_cubic(a, b, c, d);
    if (k.kind != CubicCase::ThreeReal) continue;
    found = true;
    const auto roots = cubic_roots(k);
    CHECK(roots.size() == 3);
    const auto s = solve_n2(plane(a, b, c, d));
    CHECK(s.points.size() == 4);
    for (const auto& p : s.points) CHECK(idempotent_residual(plane(a, b, c, d), p.approx) <= kResidualTolerance);
  }
  CHECK(found);
}

TEST_CASE("classification matches numeric root counts") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = evoperm::testing::random_nonzero(rng, -4, 4, 3), b = evoperm::testing::random_nonzero(rng, -4, 4, 3),
                   c = evoperm::testing::random_nonzero(rng, -4, 4, 3), d = evoperm::testing::random_nonzero(rng, -4, 4, 3);
    const auto k = classify_cubic(a, b, c, d);
    const auto roots = cubic_roots(k);
    if (!k.degenerate) {
      std::size_t expected = k.kind == CubicCase::ThreeReal ? 3 : k.kind == CubicCase::TwoReal ? 2 : 1;
      CHECK(roots.size() == expected);
      CHECK(numeric_root_count(k) == expected);
    }
    // Every emitted point solves the system, and there is one per real root plus zero.
    const auto alg = plane(a, b, c, d);
    const auto s = solve_n2(alg);
    CHECK(s.points.size() == roots.size() + 1);
    for (const auto& p : s.points) {
      if (p.exact)
        CHECK(verify_idempotent(alg, *p.exact));
      else
        CHECK(idempotent_residual(alg, p.approx) <= kResidualTolerance);
      // y-recovery: y = (b x - (bd - ac) x^2) / c.
      const long double x = p.approx[0], y = p.approx[1];
      const long double e = (b * d - a * c).to_long_double();
      CHECK(std::fabs(y - (b.to_long_double() * x - e * x * x) / c.to_long_double()) <= 1e-8L * (1 + std::fabs(y)));
    }
  }
}

TEST_CASE("uniform row sums give the point 1/d") {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const Rational d = evoperm::testing::random_nonzero(rng, -5, 5, 3);
    auto pi = oracle::random_permutation(rng, n), tau = oracle::random_permutation(rng, n);
    while (tau == pi) tau = oracle::random_permutation(rng, n);
    // Choose a_pi freely and fix a_tau[j_k] = d - a_pi[k].
    std::vector<Rational> a_pi(n), a_tau(n);
    const auto j = compose(inverse(tau), pi);
    for (std::size_t k = 1; k <= n; ++k) {
      a_pi[k - 1] = evoperm::testing::random_rational(rng, -3, 3, 2);
      a_tau[j(k) - 1] = d - a_pi[k - 1];
    }
    const PermEvolutionAlgebra alg(pi, tau, a_pi, a_tau);
    const auto s = particular_idempotents(alg);
    REQUIRE(s.points.size() == 2);
    const Element expect(std::vector<Rational>(n, d.reciprocal()));
    CHECK(*s.points[1].exact == expect);
    CHECK(verify_idempotent(alg, expect));
  }
}
