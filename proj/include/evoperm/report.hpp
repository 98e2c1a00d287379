#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "evoperm/baric.hpp"
#include "evoperm/idempotent.hpp"
#include "evoperm/io.hpp"
#include "evoperm/nilpotent.hpp"
#include "evoperm/structure.hpp"

namespace evoperm::report {

using io::json;

struct StructureSummary {
  std::optional<structure::Decomposition> decomposition;
  std::string decomposition_reason;
  /// "cycle-identity", "inverse-pair" or "none".
  std::string canonical_kind = "none";
  std::optional<PermEvolutionAlgebra> canonical_algebra;
  std::optional<structure::BasisMap> canonical_map;
  std::string canonical_reason;

  friend bool operator==(const StructureSummary&, const StructureSummary&) = default;
};

struct AnalysisReport {
  std::string label;
  PermEvolutionAlgebra algebra;
  RationalMatrix structural;
  Rational det;
  std::size_t rank = 0;
  CycleDecomposition j_cycles;
  nilpotent::NilpotentReport nilpotent;
  std::vector<baric::WeightFunction> weights;
  idempotent::IdempotentSet idempotents;
  StructureSummary structure;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const PermEvolutionAlgebra& algebra, std::string label = {});

/// The complete idempotent set for the two-dimensional shape with nonzero
/// coefficients, otherwise the particular solutions.
idempotent::IdempotentSet idempotents_for(const PermEvolutionAlgebra& algebra);
StructureSummary structure_for(const PermEvolutionAlgebra& algebra);

json to_json(const nilpotent::NilpotentReport& r);
nilpotent::NilpotentReport nilpotent_from_json(const json& j);
json to_json(const std::vector<baric::WeightFunction>& w);
std::vector<baric::WeightFunction> weights_from_json(const json& j);
json to_json(const idempotent::IdempotentSet& s);
idempotent::IdempotentSet idempotents_from_json(const json& j);
json to_json(const StructureSummary& s);
StructureSummary structure_from_json(const json& j);
json to_json(const AnalysisReport& r);
AnalysisReport analysis_from_json(const json& j);

std::string render_text(const AnalysisReport& r);
std::string render_nilpotent(const nilpotent::NilpotentReport& r);
std::string render_weights(const std::vector<baric::WeightFunction>& w);
std::string render_idempotents(const idempotent::IdempotentSet& s);
std::string render_structure(const StructureSummary& s);

/// Outcome of running the oracles against the analytic results.
struct VerifyOutcome {
  std::size_t checked = 0;
  std::size_t agreed = 0;
  std::vector<std::string> disagreements;

  bool ok() const { return checked == agreed; }
};

/// Checks one algebra: nilpotent solve vs. the support-enumeration oracle
/// (uniqueness and rays), witness substitution, criteria soundness, weights,
/// idempotents (numeric oracle for the two-dimensional shape) and structure
/// isomorphisms. Counts as one agreement when every check passes.
void verify_algebra(const PermEvolutionAlgebra& algebra, VerifyOutcome& outcome);

struct CensusRow {
  std::size_t id = 0;
  PermEvolutionAlgebra algebra;
  std::size_t weight_count = 0;
  bool unique_nilpotent = true;
  std::vector<nilpotent::Criterion> criteria_fired;

  bool baric() const { return weight_count > 0; }
};

inline constexpr std::size_t kMaxCensusDim = 4;

/// Enumerates ordered pairs pi != tau of degree n (images in lexicographic
/// order) and, for each, every assignment of the 2n coefficients from
/// `coefficients` (a_pi[1..n] then a_tau[1..n], last slot fastest). Stops
/// after `limit` rows when limit > 0. Throws PreconditionError when n is
/// outside 2..4 or the coefficient list is empty.
void census(std::size_t n, const std::vector<Rational>& coefficients, std::size_t limit,
            const std::function<void(const CensusRow&)>& emit);

json to_json(const CensusRow& row);
std::string census_header();
std::string render_census_row(const CensusRow& row);

}  // namespace evoperm::report
