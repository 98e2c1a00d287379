#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "evoperm/algebra.hpp"

namespace evoperm::io {

using nlohmann::json;

/// The on-disk description of an algebra:
///
///     {"label": "example1", "n": 4,
///      "pi": [3,1,4,2], "tau": [2,3,4,1],
///      "a_pi": ["-1","1","1","1"], "a_tau": ["1","1","1","1"]}
///
/// Permutations are 1-indexed image lists; coefficients are strings holding
/// "p/q", integers or finite decimals (JSON integers are accepted too).
struct AlgebraDocument {
  std::string label;
  std::size_t n = 0;
  std::vector<std::size_t> pi;
  std::vector<std::size_t> tau;
  std::vector<std::string> a_pi;
  std::vector<std::string> a_tau;

  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

/// Throws ParseError (with line and column) for malformed JSON and
/// ValidationError for a missing or mistyped field.
AlgebraDocument parse_document(std::string_view text);

/// Throws ValidationError naming the offending field and index.
PermEvolutionAlgebra to_algebra(const AlgebraDocument& doc);

AlgebraDocument to_document(const PermEvolutionAlgebra& algebra, std::string label = {});

/// Built-in documents: "example1", "example2", "section3-allones",
/// "baric-shared-fixed-point".
std::optional<AlgebraDocument> fixture(std::string_view name);
std::vector<std::string> fixture_names();

json write(const Rational& r);
Rational read_rational(const json& j);
json write(const std::vector<Rational>& v);
std::vector<Rational> read_rationals(const json& j);
json write(const RationalMatrix& m);
RationalMatrix read_matrix(const json& j);
json write(const PermEvolutionAlgebra& algebra);
/// Accepts blocks with pi == tau.
PermEvolutionAlgebra read_algebra(const json& j);

}  // namespace evoperm::io
