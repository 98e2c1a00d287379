#include "doctest.h"

#include "evoperm/error.hpp"
#include "evoperm/report.hpp"
#include "support.hpp"

using namespace evoperm;

TEST_CASE("documents parse and validate") {
  const auto doc = io::parse_document(R"({"label": "t", "n": 2, "pi": [2,1], "tau": [1,2],
                                          "a_pi": ["0.5", "-3/4"], "a_tau": [2, "1e1"]})");
  const auto a = io::to_algebra(doc);
  CHECK(a.a_pi() == std::vector<Rational>{Rational(1, 2), Rational(-3, 4)});
  CHECK(a.a_tau() == std::vector<Rational>{2, 10});
  CHECK(io::to_algebra(io::to_document(a, "t")) == a);

  CHECK_THROWS_AS(io::parse_document("{\"n\": 2,\n \"pi\": [2,1"), ParseError);
  try {
    io::parse_document("{\"n\": 2,\n \"pi\": [2,1");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(io::parse_document(R"({"n": 2, "pi": [2,1], "tau": [1,2], "a_pi": ["1","1"]})"), ValidationError);
  const auto bad = io::parse_document(R"({"n": 3, "pi": [1,1,2], "tau": [1,2,3], "a_pi": ["1","1","1"], "a_tau": ["1","1","1"]})");
  CHECK_THROWS_WITH_AS(io::to_algebra(bad), "'pi': image 1 repeated at positions 1 and 2", ValidationError);
  const auto shortdoc = io::parse_document(R"({"n": 3, "pi": [2,1], "tau": [1,2,3], "a_pi": ["1","1","1"], "a_tau": ["1","1","1"]})");
  CHECK_THROWS_AS(io::to_algebra(shortdoc), ValidationError);
}

TEST_CASE("fixtures") {
  for (const auto& name : io::fixture_names()) {
    const auto doc = io::fixture(name);
    REQUIRE(doc.has_value());
    CHECK(doc->label == name);
    CHECK_NOTHROW(io::to_algebra(*doc));
  }
  CHECK_FALSE(io::fixture("nope").has_value());
}

TEST_CASE("analysis of the example fixtures") {
  const auto r1 = report::analyze(io::to_algebra(*io::fixture("example1")), "example1");
  CHECK(r1.det == 0);
  CHECK(r1.rank == 3);
  CHECK(r1.nilpotent.unique);
  CHECK(r1.nilpotent.criteria_fired() == std::vector<nilpotent::Criterion>{nilpotent::Criterion::CorankOneMinors});
  CHECK(r1.j_cycles.str() == "(1 2 4)(3)");

  const auto r2 = report::analyze(io::to_algebra(*io::fixture("example2")), "example2");
  CHECK(r2.rank == 2);
  CHECK(r2.nilpotent.criteria_fired() == std::vector<nilpotent::Criterion>{nilpotent::Criterion::SignProducts});
  CHECK_FALSE(r2.structure.decomposition.has_value());

  const auto r3 = report::analyze(io::to_algebra(*io::fixture("section3-allones")));
  CHECK(r3.idempotents.complete);
  CHECK(r3.idempotents.points.size() == 2);
  CHECK(r3.structure.canonical_kind == "cycle-identity");

  const auto r4 = report::analyze(io::to_algebra(*io::fixture("baric-shared-fixed-point")));
  REQUIRE(r4.weights.size() == 1);
  CHECK(r4.weights[0].c() == 2);
  CHECK(report::render_weights(r4.weights).find("sigma(x) = 2*x_1") != std::string::npos);
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(81);
  const auto pool = evoperm::testing::integer_pool(-2, 2);
  std::vector<PermEvolutionAlgebra> cases;
  for (const auto& name : io::fixture_names()) cases.push_back(io::to_algebra(*io::fixture(name)));
  for (int i = 0; i < 150; ++i) cases.push_back(oracle::random_algebra(rng, 2 + i % 5, pool));
  for (int i = 0; i < 30; ++i) cases.push_back(evoperm::testing::random_matched_support(rng, 3 + i % 4));
  // Irrational idempotents exercise the floating fields.
  cases.push_back(PermEvolutionAlgebra({2, 1}, {1, 2}, {1, 1}, {2, 1}));
  for (const auto& a : cases) {
    const auto r = report::analyze(a, "case");
    const auto j = report::to_json(r);
    const auto back = report::analysis_from_json(report::json::parse(j.dump()));
    CHECK(back == r);
    CHECK(report::to_json(back).dump() == j.dump());
    CHECK(report::render_text(back) == report::render_text(r));
  }
}

TEST_CASE("verify_algebra agrees on random instances") {
  std::mt19937_64 rng(82);
  const auto pool = evoperm::testing::integer_pool(-2, 2);
  report::VerifyOutcome out;
  for (int i = 0; i < 300; ++i) report::verify_algebra(oracle::random_algebra(rng, 2 + i % 4, pool), out);
  for (const auto& name : io::fixture_names()) report::verify_algebra(io::to_algebra(*io::fixture(name)), out);
  CHECK(out.ok());
  for (const auto& d : out.disagreements) MESSAGE(d);
}

TEST_CASE("census") {
  std::vector<report::CensusRow> rows;
  report::census(2, {1}, 0, [&](const report::CensusRow& r) { rows.push_back(r); });
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].algebra.pi() == Permutation({1, 2}));
  CHECK(rows[1].algebra.pi() == Permutation({2, 1}));
  for (const auto& r : rows) {
    CHECK(r.unique_nilpotent);
    CHECK(report::render_census_row(r).find('\t') != std::string::npos);
  }

  std::size_t count = 0;
  report::census(3, {-1, 1}, 100, [&](const report::CensusRow&) { ++count; });
  CHECK(count == 100);

  // Rows agree with a direct analysis of the same algebra.
  report::census(3, {-1, 0, 1}, 300, [&](const report::CensusRow& r) {
    const auto full = report::analyze(r.algebra);
    CHECK(r.unique_nilpotent == full.nilpotent.unique);
    CHECK(r.weight_count == full.weights.size());
    CHECK(r.criteria_fired == full.nilpotent.criteria_fired());
  });
  CHECK_THROWS_AS(report::census(5, {1}, 0, [](const report::CensusRow&) {}), PreconditionError);
}
