#include "doctest.h"

#include "evoperm/error.hpp"
#include "evoperm/structure.hpp"
#include "support.hpp"

using namespace evoperm;
using namespace evoperm::structure;
using evoperm::testing::squares_transported;

TEST_CASE("interleaving supports are rejected with both cycles named") {
  const PermEvolutionAlgebra a({3, 2, 4, 1}, {2, 3, 1, 4}, {1, 1, 1, 1}, {1, 1, 1, 1});
  CHECK_THROWS_WITH_AS(decompose(a), "cycle supports interleave: pi cycle {1,3,4} vs tau cycle {1,2,3}",
                       PreconditionError);
}

TEST_CASE("decomposition of a two-block algebra") {
  // pi = (1 3)(2 4 5), tau = (1 3)(2 5 4)
  const auto pi = Permutation::from_cycles(5, {{1, 3}, {2, 4, 5}});
  const auto tau = Permutation::from_cycles(5, {{1, 3}, {2, 5, 4}});
  const PermEvolutionAlgebra a(pi, tau, {1, 2, 3, 4, 5}, {6, 7, 8, 9, 10});
  const auto d = decompose(a);
  REQUIRE(d.blocks.size() == 2);
  CHECK(d.blocks[0].support == std::vector<std::size_t>{1, 3});
  CHECK(d.blocks[1].support == std::vector<std::size_t>{2, 4, 5});
  // In the first block pi and tau coincide.
  CHECK(d.blocks[0].algebra.pi() == d.blocks[0].algebra.tau());
  CHECK(d.blocks[1].algebra.pi() == Permutation({2, 3, 1}));
  CHECK(d.blocks[1].algebra.tau() == Permutation({3, 1, 2}));
  CHECK(d.blocks[1].algebra.a_pi() == std::vector<Rational>{2, 4, 5});
  CHECK(reassemble(d) == a);
  for (const auto& b : d.blocks) CHECK(verify_embedding(a, b));
  CHECK_THROWS_AS(decompose(PermEvolutionAlgebra(pi, tau, {1, 2, 0, 4, 5}, {6, 7, 8, 9, 10})), PreconditionError);
}

TEST_CASE("random decompositions reassemble exactly") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = evoperm::testing::random_matched_support(rng, 3 + trial % 6);
    const auto d = decompose(a);
    CHECK(d.blocks.size() == cycles(a.pi()).cycles.size());
    CHECK(reassemble(d) == a);
    for (const auto& b : d.blocks) {
      CHECK(verify_embedding(a, b));
      CHECK(squares_transported(a, b.algebra, b.map.assignment));
      CHECK(b.algebra.pi().is_full_cycle());
      if (b.support.size() > 1) CHECK(b.algebra.pi()(1) == 2);
    }
  }
}

TEST_CASE("canonical form of a cycle with the identity") {
  // pi = (1 3 2): relabel e'_1 = e_1, e'_2 = e_3, e'_3 = e_2.
  const PermEvolutionAlgebra a({3, 1, 2}, {1, 2, 3}, {1, 2, 3}, {4, 5, 6});
  const auto f = canonical_cycle_identity(a);
  CHECK(f.map.assignment == std::vector<std::size_t>{1, 3, 2});
  CHECK(f.algebra.pi() == Permutation({2, 3, 1}));
  CHECK(f.algebra.tau().is_identity());
  CHECK(f.algebra.a_pi() == std::vector<Rational>{1, 3, 2});
  CHECK(f.algebra.a_tau() == std::vector<Rational>{4, 6, 5});
  CHECK(verify_isomorphism(a, f.algebra, f.map));
  CHECK_THROWS_WITH_AS(canonical_cycle_identity(PermEvolutionAlgebra({2, 1, 3}, {1, 2, 3}, {1, 1, 1}, {1, 1, 1})),
                       "pi is not a single n-cycle", PreconditionError);
  CHECK_THROWS_WITH_AS(canonical_cycle_identity(PermEvolutionAlgebra({2, 3, 1}, {1, 3, 2}, {1, 1, 1}, {1, 1, 1})),
                       "tau is not the identity", PreconditionError);
}

TEST_CASE("canonical form of a cycle with its inverse") {
  const PermEvolutionAlgebra a({3, 4, 2, 1}, {4, 3, 1, 2}, {1, 2, 3, 4}, {5, 6, 7, 8});
  const auto f = canonical_inverse_pair(a);
  CHECK(f.algebra.pi() == Permutation({2, 3, 4, 1}));
  CHECK(f.algebra.tau() == Permutation({4, 1, 2, 3}));
  CHECK(verify_isomorphism(a, f.algebra, f.map));
  CHECK_THROWS_WITH_AS(canonical_inverse_pair(PermEvolutionAlgebra({2, 3, 1}, {1, 2, 3}, {1, 1, 1}, {1, 1, 1})),
                       "tau is not pi^-1", PreconditionError);
}

TEST_CASE("random canonical forms are isomorphic") {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + trial % 6;
    const auto pi = evoperm::testing::random_full_cycle(rng, n);
    const auto a_pi = evoperm::testing::random_nonzero_vector(rng, n), a_tau = evoperm::testing::random_nonzero_vector(rng, n);

    const PermEvolutionAlgebra id(pi, Permutation::identity(n), a_pi, a_tau);
    const auto f = canonical_cycle_identity(id);
    CHECK(verify_isomorphism(id, f.algebra, f.map));
    CHECK(squares_transported(id, f.algebra, f.map.assignment));
    CHECK(f.algebra.tau().is_identity());

    const PermEvolutionAlgebra inv(pi, inverse(pi), a_pi, a_tau);
    const auto g = canonical_inverse_pair(inv);
    CHECK(verify_isomorphism(inv, g.algebra, g.map));
    CHECK(squares_transported(inv, g.algebra, g.map.assignment));
    CHECK(g.algebra.tau() == inverse(g.algebra.pi()));
    for (std::size_t i = 1; i <= n; ++i) CHECK(g.algebra.pi()(i) == i % n + 1);
  }
}

TEST_CASE("pull_back and bad maps") {
  const BasisMap m{3, 3, {2, 3, 1}};
  CHECK(m.is_bijective());
  CHECK(pull_back(m, Element({10, 20, 30})) == Element({20, 30, 10}));
  const PermEvolutionAlgebra a({3, 1, 2}, {1, 2, 3}, {1, 2, 3}, {4, 5, 6});
  CHECK_THROWS_AS(verify_isomorphism(a, a, BasisMap{3, 3, {1, 1, 2}}), std::invalid_argument);
  // A relabeling that ignores the structure fails the check.
  CHECK_FALSE(verify_isomorphism(a, a, BasisMap{3, 3, {2, 1, 3}}));
}
