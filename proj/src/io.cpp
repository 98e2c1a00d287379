#include "evoperm/io.hpp"

#include <map>

#include "evoperm/error.hpp"

namespace evoperm::io {

namespace {

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw ValidationError(std::string("missing field '") + name + "'");
  return *it;
}

std::vector<std::size_t> read_indices(const json& j, const char* name) {
  if (!j.is_array()) throw ValidationError(std::string("'") + name + "' must be an array of integers");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer() || j[i].get<long long>() < 1) {
      throw ValidationError(std::string("'") + name + "' entry " + std::to_string(i + 1) +
                            " must be a positive integer");
    }
    out.push_back(j[i].get<std::size_t>());
  }
  return out;
}

std::vector<std::string> read_coefficient_strings(const json& j, const char* name) {
  if (!j.is_array()) throw ValidationError(std::string("'") + name + "' must be an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].is_string()) {
      out.push_back(j[i].get<std::string>());
    } else if (j[i].is_number_integer()) {
      out.push_back(std::to_string(j[i].get<long long>()));
    } else {
      throw ValidationError(std::string("'") + name + "' entry " + std::to_string(i + 1) +
                            " must be a string such as \"3/4\" or an integer");
    }
  }
  return out;
}

std::vector<Rational> parse_coefficients(const std::vector<std::string>& text, const char* name) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    try {
      out.push_back(Rational::parse(text[i]));
    } catch (const ParseError& e) {
      throw ValidationError(std::string("'") + name + "' entry " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

AlgebraDocument make_doc(std::string label, std::vector<std::size_t> pi, std::vector<std::size_t> tau,
                         std::vector<std::string> a_pi, std::vector<std::string> a_tau) {
  const std::size_t n = pi.size();
  return {std::move(label), n, std::move(pi), std::move(tau), std::move(a_pi), std::move(a_tau)};
}

const std::map<std::string, AlgebraDocument, std::less<>>& fixtures() {
  static const std::map<std::string, AlgebraDocument, std::less<>> table = {
      {"example1", make_doc("example1", {3, 1, 4, 2}, {2, 3, 4, 1}, {"-1", "1", "1", "1"}, {"1", "1", "1", "1"})},
      {"example2", make_doc("example2", {3, 2, 4, 1}, {2, 3, 1, 4}, {"1", "1", "1", "1"}, {"1", "1", "1", "1"})},
      {"section3-allones", make_doc("section3-allones", {2, 1}, {1, 2}, {"1", "1"}, {"1", "1"})},
      {"baric-shared-fixed-point",
       make_doc("baric-shared-fixed-point", {1, 3, 2}, {1, 2, 3}, {"1", "1", "1"}, {"1", "1", "1"})},
  };
  return table;
}

}  // namespace

AlgebraDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at " + location(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!j.is_object()) throw ValidationError("algebra document must be a JSON object");

  AlgebraDocument doc;
  if (auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) throw ValidationError("'label' must be a string");
    doc.label = it->get<std::string>();
  }
  const json& n = field(j, "n");
  if (!n.is_number_integer() || n.get<long long>() < 1) throw ValidationError("'n' must be a positive integer");
  doc.n = n.get<std::size_t>();
  doc.pi = read_indices(field(j, "pi"), "pi");
  doc.tau = read_indices(field(j, "tau"), "tau");
  doc.a_pi = read_coefficient_strings(field(j, "a_pi"), "a_pi");
  doc.a_tau = read_coefficient_strings(field(j, "a_tau"), "a_tau");
  return doc;
}

PermEvolutionAlgebra to_algebra(const AlgebraDocument& doc) {
  auto check_len = [&](std::size_t len, const char* name) {
    if (len != doc.n) {
      throw ValidationError(std::string("'") + name + "' has length " + std::to_string(len) + ", expected n = " +
                            std::to_string(doc.n));
    }
  };
  check_len(doc.pi.size(), "pi");
  check_len(doc.tau.size(), "tau");
  check_len(doc.a_pi.size(), "a_pi");
  check_len(doc.a_tau.size(), "a_tau");
  if (doc.n > 64) throw ValidationError("dimension " + std::to_string(doc.n) + " exceeds the limit of 64");

  auto perm = [](const std::vector<std::size_t>& images, const char* name) {
    try {
      return Permutation(images);
    } catch (const ValidationError& e) {
      throw ValidationError(std::string("'") + name + "': " + e.what());
    }
  };
  return PermEvolutionAlgebra(perm(doc.pi, "pi"), perm(doc.tau, "tau"), parse_coefficients(doc.a_pi, "a_pi"),
                              parse_coefficients(doc.a_tau, "a_tau"));
}

AlgebraDocument to_document(const PermEvolutionAlgebra& algebra, std::string label) {
  AlgebraDocument doc{std::move(label), algebra.dim(), algebra.pi().images(), algebra.tau().images(), {}, {}};
  for (const auto& x : algebra.a_pi()) doc.a_pi.push_back(x.str());
  for (const auto& x : algebra.a_tau()) doc.a_tau.push_back(x.str());
  return doc;
}

std::optional<AlgebraDocument> fixture(std::string_view name) {
  auto it = fixtures().find(name);
  if (it == fixtures().end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [name, doc] : fixtures()) out.push_back(name);
  return out;
}

json write(const Rational& r) { return r.str(); }

Rational read_rational(const json& j) { return Rational::parse(j.get<std::string>()); }

json write(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(write(x));
  return out;
}

std::vector<Rational> read_rationals(const json& j) {
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(read_rational(x));
  return out;
}

json write(const RationalMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(write(std::vector<Rational>(m.row(r).begin(), m.row(r).end())));
  return out;
}

RationalMatrix read_matrix(const json& j) {
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j[0].size();
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = read_rational(j[r][c]);
  return m;
}

json write(const PermEvolutionAlgebra& algebra) {
  return {{"n", algebra.dim()},
          {"pi", algebra.pi().images()},
          {"tau", algebra.tau().images()},
          {"a_pi", write(algebra.a_pi())},
          {"a_tau", write(algebra.a_tau())}};
}

PermEvolutionAlgebra read_algebra(const json& j) {
  return PermEvolutionAlgebra::block(Permutation(j.at("pi").get<std::vector<std::size_t>>()),
                                     Permutation(j.at("tau").get<std::vector<std::size_t>>()),
                                     read_rationals(j.at("a_pi")), read_rationals(j.at("a_tau")));
}

}  // namespace evoperm::io
