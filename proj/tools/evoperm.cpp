#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "evoperm/error.hpp"
#include "evoperm/oracle.hpp"
#include "evoperm/report.hpp"

using namespace evoperm;

namespace {

enum Exit { kOk = 0, kParse = 2, kPrecondition = 3, kDisagreement = 4 };

struct Input {
  bool json = false;
  std::string fixture;
  std::string file;
};

std::pair<PermEvolutionAlgebra, std::string> load(const Input& in) {
  io::AlgebraDocument doc;
  if (!in.fixture.empty()) {
    auto f = io::fixture(in.fixture);
    if (!f) {
      std::string names;
      for (const auto& n : io::fixture_names()) names += " " + n;
      throw ValidationError("unknown fixture '" + in.fixture + "' (available:" + names + ")");
    }
    doc = *f;
  } else if (!in.file.empty()) {
    std::ifstream is(in.file);
    if (!is) throw ParseError("cannot open " + in.file);
    std::stringstream ss;
    ss << is.rdbuf();
    doc = io::parse_document(ss.str());
  } else {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    doc = io::parse_document(ss.str());
  }
  return {io::to_algebra(doc), doc.label};
}

void emit(const Input& in, const io::json& j, const std::string& text) {
  if (in.json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

std::uint64_t seed_from_env() {
  const char* s = std::getenv("EVOPERM_SEED");
  if (!s || !*s) return 1;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw ValidationError(std::string("EVOPERM_SEED is not an unsigned integer: ") + s);
  }
}

int run_verify(const Input& in, std::size_t random_count) {
  report::VerifyOutcome outcome;
  if (random_count > 0) {
    std::mt19937_64 rng(seed_from_env());
    const std::vector<Rational> pool{-2, -1, 0, 1, 2};
    std::uniform_int_distribution<std::size_t> dim(2, 5);
    for (std::size_t t = 0; t < random_count; ++t) report::verify_algebra(oracle::random_algebra(rng, dim(rng), pool), outcome);
  } else {
    report::verify_algebra(load(in).first, outcome);
  }
  if (in.json) {
    std::cout << io::json{{"checked", outcome.checked}, {"agreed", outcome.agreed}, {"disagreements", outcome.disagreements}}.dump(2)
              << '\n';
  } else {
    std::cout << "analytic/oracle agreement: " << outcome.agreed << '/' << outcome.checked << '\n';
    for (const auto& d : outcome.disagreements) std::cout << "  " << d << '\n';
  }
  return outcome.ok() ? kOk : kDisagreement;
}

int run_census(const Input& in, std::size_t n, const std::string& coeffs, std::size_t limit) {
  std::vector<Rational> pool;
  std::stringstream ss(coeffs);
  for (std::string item; std::getline(ss, item, ',');) pool.push_back(Rational::parse(item));
  if (!in.json) std::cout << report::census_header() << '\n';
  report::census(n, pool, limit, [&](const report::CensusRow& row) {
    if (in.json)
      std::cout << report::to_json(row).dump() << '\n';
    else
      std::cout << report::render_census_row(row) << '\n';
  });
  return kOk;
}

int run(const std::string& command, const Input& in) {
  if (command == "analyze") {
    auto [algebra, label] = load(in);
    const auto r = report::analyze(algebra, label);
    emit(in, report::to_json(r), report::render_text(r));
  } else if (command == "nilpotent") {
    const auto r = nilpotent::solve(load(in).first);
    emit(in, report::to_json(r), report::render_nilpotent(r));
  } else if (command == "idempotent") {
    const auto r = report::idempotents_for(load(in).first);
    emit(in, report::to_json(r), report::render_idempotents(r));
  } else if (command == "baric") {
    const auto w = baric::find_weights(load(in).first);
    emit(in, report::to_json(w), report::render_weights(w));
  } else if (command == "decompose") {
    report::StructureSummary s;
    s.decomposition = structure::decompose(load(in).first);
    s.decomposition_reason = std::to_string(s.decomposition->blocks.size()) + " block(s) along common cycle supports";
    const auto j = report::to_json(s);
    emit(in, {{"blocks", j.at("decomposition")}}, report::render_structure(s).substr(0, report::render_structure(s).find("canonical form:")));
  } else if (command == "canonical") {
    const auto algebra = load(in).first;
    const bool identity = algebra.tau().is_identity();
    const auto form = identity ? structure::canonical_cycle_identity(algebra) : structure::canonical_inverse_pair(algebra);
    report::StructureSummary s;
    s.canonical_kind = identity ? "cycle-identity" : "inverse-pair";
    s.canonical_algebra = form.algebra;
    s.canonical_map = form.map;
    s.canonical_reason = "relabeled along the pi-orbit of 1";
    const auto j = report::to_json(s);
    const auto text = report::render_structure(s);
    emit(in, {{"kind", s.canonical_kind}, {"canonical", j.at("canonical")}}, text.substr(text.find("canonical form:")));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evolution algebras of permutations: nilpotents, idempotents, weights, structure"};
  app.require_subcommand(1);

  Input in;
  std::size_t random_count = 0;
  std::size_t census_n = 2;
  std::string census_coeffs = "1";
  std::size_t census_limit = 0;

  const std::vector<std::pair<std::string, std::string>> commands{
      {"analyze", "full report"},
      {"nilpotent", "absolute nilpotent elements and uniqueness criteria"},
      {"idempotent", "idempotent elements (complete for n = 2)"},
      {"baric", "weight functions"},
      {"decompose", "direct-sum decomposition along common cycle supports"},
      {"canonical", "canonical form for (n-cycle, id) or (n-cycle, inverse)"},
      {"verify", "run the oracles against the analytic results"},
      {"census", "classify every pair of permutations of degree n"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", in.json, "machine-readable output");
    if (name == "census") {
      sub->add_option("--n", census_n, "degree (2..4)");
      sub->add_option("--coeffs", census_coeffs, "comma-separated coefficient values, e.g. --coeffs=-1,1");
      sub->add_option("--limit", census_limit, "stop after this many rows (0 = all)");
      continue;
    }
    sub->add_option("--fixture", in.fixture, "built-in algebra");
    sub->add_option("FILE", in.file, "algebra document (stdin when absent)");
    if (name == "verify") sub->add_option("--random", random_count, "check N random instances (seed from EVOPERM_SEED)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "verify") return run_verify(in, random_count);
    if (command == "census") return run_census(in, census_n, census_coeffs, census_limit);
    return run(command, in);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return kPrecondition;
  }
}
