#include "evoperm/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "evoperm/error.hpp"
#include "evoperm/oracle.hpp"

namespace evoperm::report {

namespace {

template <typename E>
E enum_from(const std::string& text, std::initializer_list<E> values) {
  for (E v : values) {
    using nilpotent::to_string;
    using idempotent::to_string;
    if (to_string(v) == text) return v;
  }
  throw ParseError("unknown label '" + text + "'");
}

nilpotent::SolutionKind kind_from(const std::string& s) {
  using K = nilpotent::SolutionKind;
  return enum_from(s, {K::TrivialOnly, K::FreeCoordinate, K::OneParamFamily, K::SegmentFamilies});
}

nilpotent::Criterion criterion_from(const std::string& s) {
  using C = nilpotent::Criterion;
  return enum_from(s, {C::Nonsingular, C::CorankOneMinors, C::SignProducts, C::CorankTwoCoefficients});
}

nilpotent::Verdict verdict_from(const std::string& s) {
  using V = nilpotent::Verdict;
  return enum_from(s, {V::Certified, V::NotCertified, V::Inapplicable});
}

idempotent::CubicCase cubic_case_from(const std::string& s) {
  using C = idempotent::CubicCase;
  return enum_from(s, {C::DegenerateLinear, C::DegenerateOutside, C::ThreeReal, C::OneReal, C::TwoReal,
                       C::OneRealTriple});
}

json opt_rational(const std::optional<Rational>& r) { return r ? io::write(*r) : json(nullptr); }

std::optional<Rational> read_opt_rational(const json& j) {
  if (j.is_null()) return std::nullopt;
  return io::read_rational(j);
}

json write_map(const structure::BasisMap& m) {
  return {{"source_dim", m.source_dim}, {"target_dim", m.target_dim}, {"assignment", m.assignment}};
}

structure::BasisMap read_map(const json& j) {
  return {j.at("source_dim").get<std::size_t>(), j.at("target_dim").get<std::size_t>(),
          j.at("assignment").get<std::vector<std::size_t>>()};
}

std::string join(const std::vector<Rational>& v, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string cycle_str(const std::vector<std::size_t>& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
  os << ')';
  return os.str();
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

std::vector<std::vector<Rational>> normalized_family_rays(const nilpotent::NilpotentReport& rep, std::size_t n) {
  std::vector<std::vector<Rational>> rays;
  for (const auto& cs : rep.per_cycle) {
    for (const auto& f : cs.families) {
      auto u = nilpotent::square_witness(n, f);
      auto first = std::find_if(u.begin(), u.end(), [](const Rational& x) { return !x.is_zero(); });
      const Rational scale = first->reciprocal();
      for (auto& x : u) x *= scale;
      rays.push_back(std::move(u));
    }
  }
  std::sort(rays.begin(), rays.end());
  return rays;
}

double hausdorff(const std::vector<std::array<double, 2>>& a, const std::vector<std::array<double, 2>>& b) {
  auto directed = [](const auto& from, const auto& to) {
    double worst = 0;
    for (const auto& p : from) {
      double best = INFINITY;
      for (const auto& q : to) best = std::min(best, std::max(std::fabs(p[0] - q[0]), std::fabs(p[1] - q[1])));
      worst = std::max(worst, best);
    }
    return worst;
  };
  if (a.empty() != b.empty()) return INFINITY;
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace

idempotent::IdempotentSet idempotents_for(const PermEvolutionAlgebra& algebra) {
  if (idempotent::is_two_dim_shape(algebra)) {
    const auto coeffs = idempotent::two_dim_coefficients(algebra);
    if (std::none_of(coeffs.begin(), coeffs.end(), [](const Rational& x) { return x.is_zero(); })) {
      return idempotent::solve_n2(algebra);
    }
  }
  return idempotent::particular_idempotents(algebra);
}

StructureSummary structure_for(const PermEvolutionAlgebra& algebra) {
  StructureSummary s;
  try {
    s.decomposition = structure::decompose(algebra);
    s.decomposition_reason = std::to_string(s.decomposition->blocks.size()) + " block(s) along common cycle supports";
  } catch (const PreconditionError& e) {
    s.decomposition_reason = e.what();
  }

  const bool full = algebra.pi().is_full_cycle();
  std::optional<structure::CanonicalForm> form;
  try {
    if (full && algebra.tau().is_identity()) {
      s.canonical_kind = "cycle-identity";
      form = structure::canonical_cycle_identity(algebra);
    } else if (full && algebra.tau() == inverse(algebra.pi())) {
      s.canonical_kind = "inverse-pair";
      form = structure::canonical_inverse_pair(algebra);
    } else {
      s.canonical_reason = "needs pi a single n-cycle with tau = id or tau = pi^-1";
    }
  } catch (const PreconditionError& e) {
    s.canonical_kind = "none";
    s.canonical_reason = e.what();
  }
  if (form) {
    s.canonical_algebra = form->algebra;
    s.canonical_map = form->map;
    s.canonical_reason = "relabeled along the pi-orbit of 1";
  }
  return s;
}

AnalysisReport analyze(const PermEvolutionAlgebra& algebra, std::string label) {
  const RationalMatrix structural = algebra.structural_matrix();
  const RationalMatrix system = structural.transpose();
  return AnalysisReport{std::move(label),
                        algebra,
                        structural,
                        det(system),
                        rank(system),
                        cycles(algebra.j_map()),
                        nilpotent::solve(algebra),
                        baric::find_weights(algebra),
                        idempotents_for(algebra),
                        structure_for(algebra)};
}

// ---------------------------------------------------------------------------
// JSON

json to_json(const nilpotent::NilpotentReport& r) {
  json cycles_j = json::array();
  for (const auto& cs : r.per_cycle) {
    json fams = json::array();
    for (const auto& f : cs.families) {
      json ratios = json::array();
      for (const auto& x : f.ratios) ratios.push_back(x.str());
      fams.push_back({{"support", f.support}, {"ratios", ratios}});
    }
    cycles_j.push_back({{"cycle", cs.cycle},
                        {"kind", nilpotent::to_string(cs.kind)},
                        {"families", fams},
                        {"sign_freedom", cs.sign_freedom},
                        {"note", cs.note}});
  }
  json crit = json::array();
  for (const auto& c : r.criteria) {
    json cj = {{"criterion", nilpotent::to_string(c.criterion)},
               {"verdict", nilpotent::to_string(c.verdict)},
               {"reason", c.reason}};
    if (c.minors) {
      cj["minors"] = {{"pivot_variable", c.minors->pivot_variable},
                      {"free_variable", c.minors->free_variable},
                      {"replaced_det", io::write(c.minors->replaced_det)},
                      {"leading_det", io::write(c.minors->leading_det)},
                      {"product", io::write(c.minors->product())}};
    }
    if (c.certifying_variable) cj["certifying_variable"] = *c.certifying_variable;
    crit.push_back(std::move(cj));
  }
  json fired = json::array();
  for (auto c : r.criteria_fired()) fired.push_back(nilpotent::to_string(c));
  return {{"unique", r.unique}, {"cycles", cycles_j}, {"criteria", crit}, {"criteria_fired", fired}};
}

nilpotent::NilpotentReport nilpotent_from_json(const json& j) {
  nilpotent::NilpotentReport r;
  r.unique = j.at("unique").get<bool>();
  for (const auto& cj : j.at("cycles")) {
    nilpotent::CycleSolution cs;
    cs.cycle = cj.at("cycle").get<std::vector<std::size_t>>();
    cs.kind = kind_from(cj.at("kind").get<std::string>());
    cs.sign_freedom = cj.at("sign_freedom").get<bool>();
    cs.note = cj.at("note").get<std::string>();
    for (const auto& fj : cj.at("families")) {
      nilpotent::Family f;
      f.support = fj.at("support").get<std::vector<std::size_t>>();
      for (const auto& x : fj.at("ratios")) f.ratios.push_back(SqrtRational::parse(x.get<std::string>()));
      cs.families.push_back(std::move(f));
    }
    r.per_cycle.push_back(std::move(cs));
  }
  for (const auto& cj : j.at("criteria")) {
    nilpotent::CriterionResult c;
    c.criterion = criterion_from(cj.at("criterion").get<std::string>());
    c.verdict = verdict_from(cj.at("verdict").get<std::string>());
    c.reason = cj.at("reason").get<std::string>();
    if (auto it = cj.find("minors"); it != cj.end()) {
      c.minors = nilpotent::MinorPair{it->at("pivot_variable").get<std::size_t>(),
                                      it->at("free_variable").get<std::size_t>(),
                                      io::read_rational(it->at("replaced_det")),
                                      io::read_rational(it->at("leading_det"))};
    }
    if (auto it = cj.find("certifying_variable"); it != cj.end()) c.certifying_variable = it->get<std::size_t>();
    r.criteria.push_back(std::move(c));
  }
  return r;
}

json to_json(const std::vector<baric::WeightFunction>& w) {
  json out = json::array();
  for (const auto& x : w) out.push_back({{"k0", x.k0()}, {"c", io::write(x.c())}});
  return out;
}

std::vector<baric::WeightFunction> weights_from_json(const json& j) {
  std::vector<baric::WeightFunction> out;
  for (const auto& x : j) out.emplace_back(x.at("k0").get<std::size_t>(), io::read_rational(x.at("c")));
  return out;
}

json to_json(const idempotent::IdempotentSet& s) {
  json pts = json::array();
  for (const auto& p : s.points) {
    pts.push_back({{"approx", p.approx},
                   {"exact", p.exact ? io::write(p.exact->coords()) : json(nullptr)},
                   {"residual", p.residual},
                   {"multiplicity", p.multiplicity}});
  }
  json cls = nullptr;
  if (s.classification) {
    const auto& c = *s.classification;
    cls = {{"a", io::write(c.a)},         {"b", io::write(c.b)},         {"c", io::write(c.c)},
           {"d", io::write(c.d)},         {"degenerate", c.degenerate},  {"p", opt_rational(c.p)},
           {"q", opt_rational(c.q)},      {"delta", opt_rational(c.delta)}, {"case", idempotent::to_string(c.kind)}};
  }
  return {{"points", pts},
          {"includes_zero", s.includes_zero},
          {"classification", cls},
          {"complete", s.complete},
          {"note", s.note}};
}

idempotent::IdempotentSet idempotents_from_json(const json& j) {
  idempotent::IdempotentSet s;
  for (const auto& pj : j.at("points")) {
    idempotent::IdempotentPoint p;
    p.approx = pj.at("approx").get<std::vector<double>>();
    if (!pj.at("exact").is_null()) p.exact = Element(io::read_rationals(pj.at("exact")));
    p.residual = pj.at("residual").get<double>();
    p.multiplicity = pj.at("multiplicity").get<int>();
    s.points.push_back(std::move(p));
  }
  s.includes_zero = j.at("includes_zero").get<bool>();
  s.complete = j.at("complete").get<bool>();
  s.note = j.at("note").get<std::string>();
  if (const auto& c = j.at("classification"); !c.is_null()) {
    idempotent::CubicClassification cls{io::read_rational(c.at("a")), io::read_rational(c.at("b")),
                                        io::read_rational(c.at("c")), io::read_rational(c.at("d"))};
    cls.degenerate = c.at("degenerate").get<bool>();
    cls.p = read_opt_rational(c.at("p"));
    cls.q = read_opt_rational(c.at("q"));
    cls.delta = read_opt_rational(c.at("delta"));
    cls.kind = cubic_case_from(c.at("case").get<std::string>());
    s.classification = std::move(cls);
  }
  return s;
}

json to_json(const StructureSummary& s) {
  json dec = nullptr;
  if (s.decomposition) {
    dec = json::array();
    for (const auto& b : s.decomposition->blocks)
      dec.push_back({{"support", b.support}, {"algebra", io::write(b.algebra)}, {"map", write_map(b.map)}});
  }
  json canon = nullptr;
  if (s.canonical_algebra) canon = {{"algebra", io::write(*s.canonical_algebra)}, {"map", write_map(*s.canonical_map)}};
  return {{"decomposition", dec},
          {"decomposition_reason", s.decomposition_reason},
          {"canonical_kind", s.canonical_kind},
          {"canonical", canon},
          {"canonical_reason", s.canonical_reason}};
}

StructureSummary structure_from_json(const json& j) {
  StructureSummary s;
  if (const auto& dec = j.at("decomposition"); !dec.is_null()) {
    structure::Decomposition d;
    for (const auto& b : dec)
      d.blocks.push_back({b.at("support").get<std::vector<std::size_t>>(), io::read_algebra(b.at("algebra")),
                          read_map(b.at("map"))});
    s.decomposition = std::move(d);
  }
  s.decomposition_reason = j.at("decomposition_reason").get<std::string>();
  s.canonical_kind = j.at("canonical_kind").get<std::string>();
  if (const auto& c = j.at("canonical"); !c.is_null()) {
    s.canonical_algebra = io::read_algebra(c.at("algebra"));
    s.canonical_map = read_map(c.at("map"));
  }
  s.canonical_reason = j.at("canonical_reason").get<std::string>();
  return s;
}

json to_json(const AnalysisReport& r) {
  return {{"label", r.label},
          {"algebra", io::write(r.algebra)},
          {"structural_matrix", io::write(r.structural)},
          {"det", io::write(r.det)},
          {"rank", r.rank},
          {"j_cycles", r.j_cycles.cycles},
          {"nilpotent", to_json(r.nilpotent)},
          {"weights", to_json(r.weights)},
          {"idempotents", to_json(r.idempotents)},
          {"structure", to_json(r.structure)}};
}

AnalysisReport analysis_from_json(const json& j) {
  return AnalysisReport{j.at("label").get<std::string>(),
                        io::read_algebra(j.at("algebra")),
                        io::read_matrix(j.at("structural_matrix")),
                        io::read_rational(j.at("det")),
                        j.at("rank").get<std::size_t>(),
                        CycleDecomposition{j.at("j_cycles").get<std::vector<std::vector<std::size_t>>>()},
                        nilpotent_from_json(j.at("nilpotent")),
                        weights_from_json(j.at("weights")),
                        idempotents_from_json(j.at("idempotents")),
                        structure_from_json(j.at("structure"))};
}

// ---------------------------------------------------------------------------
// Text

std::string render_nilpotent(const nilpotent::NilpotentReport& r) {
  std::ostringstream os;
  os << "absolute nilpotents: " << (r.unique ? "unique (only x = 0)" : "nontrivial solutions exist") << '\n';
  for (const auto& cs : r.per_cycle) {
    os << "  cycle " << cycle_str(cs.cycle) << ": " << nilpotent::to_string(cs.kind);
    if (!cs.note.empty()) os << " [" << cs.note << ']';
    os << '\n';
    for (const auto& f : cs.families) {
      os << "    family t >= 0:";
      for (std::size_t k = 0; k < f.support.size(); ++k) os << " |x_" << f.support[k] << "| = " << f.ratios[k].str() << "*t";
      if (cs.sign_freedom) os << "  (signs free)";
      os << '\n';
    }
  }
  os << "  criteria:\n";
  for (const auto& c : r.criteria) {
    os << "    " << nilpotent::to_string(c.criterion) << ": " << nilpotent::to_string(c.verdict) << " (" << c.reason << ')';
    if (c.minors) os << "  det(M_" << c.minors->pivot_variable << "," << c.minors->free_variable << ") = " << c.minors->replaced_det
                     << ", det(M_r) = " << c.minors->leading_det;
    os << '\n';
  }
  return os.str();
}

std::string render_weights(const std::vector<baric::WeightFunction>& w) {
  std::ostringstream os;
  if (w.empty()) {
    os << "weight functions: none (not baric)\n";
    return os.str();
  }
  os << "weight functions: " << w.size() << '\n';
  for (const auto& x : w) os << "  sigma(x) = " << x.c() << "*x_" << x.k0() << '\n';
  return os.str();
}

std::string render_idempotents(const idempotent::IdempotentSet& s) {
  std::ostringstream os;
  os << "idempotents (" << (s.complete ? "complete" : "particular solutions, not complete") << "): " << s.points.size()
     << '\n';
  if (s.classification) {
    const auto& c = *s.classification;
    os << "  a = " << c.a << ", b = " << c.b << ", c = " << c.c << ", d = " << c.d << "; cubic case "
       << idempotent::to_string(c.kind);
    if (c.delta) os << " (p = " << *c.p << ", q = " << *c.q << ", delta = " << *c.delta << ')';
    os << '\n';
  }
  for (const auto& p : s.points) {
    os << "  ";
    if (p.exact) {
      os << p.exact->str() << "  exact";
    } else {
      os << '(';
      for (std::size_t i = 0; i < p.approx.size(); ++i) os << (i ? ", " : "") << fmt_double(p.approx[i]);
      os << ")  residual " << fmt_double(p.residual);
    }
    if (p.multiplicity > 1) os << "  root multiplicity " << p.multiplicity;
    os << '\n';
  }
  if (!s.note.empty()) os << "  note: " << s.note << '\n';
  return os.str();
}

std::string render_structure(const StructureSummary& s) {
  std::ostringstream os;
  os << "direct-sum decomposition: " << s.decomposition_reason << '\n';
  if (s.decomposition) {
    for (const auto& b : s.decomposition->blocks) {
      os << "  block " << cycle_str(b.support) << ": pi = " << b.algebra.pi().str() << ", tau = " << b.algebra.tau().str()
         << ", a_pi = " << join(b.algebra.a_pi()) << ", a_tau = " << join(b.algebra.a_tau()) << '\n';
    }
  }
  os << "canonical form: " << s.canonical_kind << " (" << s.canonical_reason << ")\n";
  if (s.canonical_algebra) {
    os << "  e'_i = e_{assignment[i]}, assignment = [";
    for (std::size_t i = 0; i < s.canonical_map->assignment.size(); ++i)
      os << (i ? "," : "") << s.canonical_map->assignment[i];
    os << "]\n  pi* = " << s.canonical_algebra->pi().str() << ", tau* = " << s.canonical_algebra->tau().str()
       << ", a_pi* = " << join(s.canonical_algebra->a_pi()) << ", a_tau* = " << join(s.canonical_algebra->a_tau()) << '\n';
  }
  return os.str();
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  const auto& a = r.algebra;
  os << "algebra " << (r.label.empty() ? "(unnamed)" : r.label) << ", n = " << a.dim() << '\n';
  os << "  pi    = " << a.pi().str() << "  cycles " << cycles(a.pi()).str() << '\n';
  os << "  tau   = " << a.tau().str() << "  cycles " << cycles(a.tau()).str() << '\n';
  os << "  a_pi  = " << join(a.a_pi()) << '\n';
  os << "  a_tau = " << join(a.a_tau()) << '\n';
  os << "  j-map cycles " << r.j_cycles.str() << '\n';
  os << "structural matrix M (row i = e_i^2):\n";
  for (std::size_t i = 0; i < r.structural.rows(); ++i) {
    os << "  [";
    for (const auto& x : r.structural.row(i)) os << ' ' << std::setw(5) << x.str();
    os << " ]\n";
  }
  os << "system matrix: det = " << r.det << ", rank = " << r.rank << '\n';
  os << render_nilpotent(r.nilpotent) << render_weights(r.weights) << render_idempotents(r.idempotents)
     << render_structure(r.structure);
  return os.str();
}

// ---------------------------------------------------------------------------
// Oracle agreement

void verify_algebra(const PermEvolutionAlgebra& algebra, VerifyOutcome& outcome) {
  ++outcome.checked;
  std::vector<std::string> problems;
  const std::size_t n = algebra.dim();

  const auto rep = nilpotent::solve(algebra);
  for (const auto& cs : rep.per_cycle)
    for (const auto& f : cs.families)
      if (!nilpotent::verify_squares(algebra, nilpotent::square_witness(n, f))) problems.push_back("nilpotent witness fails substitution");

  if (n <= oracle::kMaxNilpotentDim) {
    const auto orc = oracle::nilpotent_oracle(algebra);
    if (rep.unique == orc.nontrivial()) problems.push_back("nilpotent uniqueness disagrees with oracle");
    if (normalized_family_rays(rep, n) != orc.rays) problems.push_back("nilpotent families differ from oracle rays");
    for (const auto& c : rep.criteria)
      if (c.certifies() && orc.nontrivial())
        problems.push_back("criterion " + nilpotent::to_string(c.criterion) + " certified a non-unique instance");
  }

  for (const auto& w : baric::find_weights(algebra))
    if (!baric::is_character(algebra, w)) problems.push_back("weight on x_" + std::to_string(w.k0()) + " is not a character");

  const auto ids = idempotents_for(algebra);
  for (const auto& p : ids.points) {
    const bool ok = p.exact ? idempotent::verify_idempotent(algebra, *p.exact)
                            : idempotent::idempotent_residual(algebra, p.approx) <= idempotent::kResidualTolerance;
    if (!ok) problems.push_back("idempotent point fails substitution");
  }
  if (ids.classification) {
    const auto& c = *ids.classification;
    const auto search = oracle::idempotent_search_n2(c.a, c.b, c.c, c.d);
    std::vector<std::array<double, 2>> mine;
    for (const auto& p : ids.points) mine.push_back({p.approx[0], p.approx[1]});
    if (!(hausdorff(mine, search.points) <= 1e-7)) problems.push_back("idempotent set differs from numeric oracle");
  }

  const auto st = structure_for(algebra);
  if (st.decomposition) {
    for (const auto& b : st.decomposition->blocks)
      if (!structure::verify_embedding(algebra, b)) problems.push_back("decomposition block does not embed");
    if (!(structure::reassemble(*st.decomposition) == algebra)) problems.push_back("decomposition does not reassemble");
  }
  if (st.canonical_algebra && !structure::verify_isomorphism(algebra, *st.canonical_algebra, *st.canonical_map))
    problems.push_back("canonical form is not isomorphic");

  if (problems.empty()) {
    ++outcome.agreed;
    return;
  }
  for (auto& p : problems)
    outcome.disagreements.push_back("pi=" + algebra.pi().str() + " tau=" + algebra.tau().str() + " a_pi=[" +
                                    join(algebra.a_pi(), ",") + "] a_tau=[" + join(algebra.a_tau(), ",") + "]: " + p);
}

// ---------------------------------------------------------------------------
// Census

void census(std::size_t n, const std::vector<Rational>& coefficients, std::size_t limit,
            const std::function<void(const CensusRow&)>& emit) {
  if (n < 2 || n > kMaxCensusDim) throw PreconditionError("census needs 2 <= n <= " + std::to_string(kMaxCensusDim));
  if (coefficients.empty()) throw PreconditionError("census needs a nonempty coefficient list");

  std::vector<Permutation> perms;
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i + 1;
  do perms.emplace_back(images);
  while (std::next_permutation(images.begin(), images.end()));

  std::size_t id = 0;
  const std::size_t slots = 2 * n;
  for (const auto& pi : perms) {
    for (const auto& tau : perms) {
      if (pi == tau) continue;
      std::vector<std::size_t> odometer(slots, 0);
      while (true) {
        std::vector<Rational> a_pi(n), a_tau(n);
        for (std::size_t s = 0; s < n; ++s) {
          a_pi[s] = coefficients[odometer[s]];
          a_tau[s] = coefficients[odometer[n + s]];
        }
        PermEvolutionAlgebra algebra(pi, tau, std::move(a_pi), std::move(a_tau));
        const auto nil = nilpotent::solve(algebra);
        const std::size_t weights = baric::find_weights(algebra).size();
        emit(CensusRow{++id, std::move(algebra), weights, nil.unique, nil.criteria_fired()});
        if (limit > 0 && id >= limit) return;

        std::size_t s = slots;
        while (s > 0) {
          --s;
          if (++odometer[s] < coefficients.size()) break;
          odometer[s] = 0;
          if (s == 0) {
            s = slots + 1;
            break;
          }
        }
        if (s == slots + 1) break;
      }
    }
  }
}

json to_json(const CensusRow& row) {
  json fired = json::array();
  for (auto c : row.criteria_fired) fired.push_back(nilpotent::to_string(c));
  return {{"id", row.id},
          {"pi", row.algebra.pi().images()},
          {"tau", row.algebra.tau().images()},
          {"a_pi", io::write(row.algebra.a_pi())},
          {"a_tau", io::write(row.algebra.a_tau())},
          {"baric", row.baric()},
          {"weights", row.weight_count},
          {"unique_nilpotent", row.unique_nilpotent},
          {"criteria_fired", fired}};
}

std::string census_header() { return "id\tpi\ttau\ta_pi\ta_tau\tbaric\tweights\tunique_nilpotent\tcriteria_fired"; }

std::string render_census_row(const CensusRow& row) {
  std::ostringstream os;
  os << row.id << '\t' << row.algebra.pi().str() << '\t' << row.algebra.tau().str() << "\t[" << join(row.algebra.a_pi(), ",")
     << "]\t[" << join(row.algebra.a_tau(), ",") << "]\t" << (row.baric() ? "yes" : "no") << '\t' << row.weight_count
     << '\t' << (row.unique_nilpotent ? "yes" : "no") << '\t';
  if (row.criteria_fired.empty()) os << '-';
  for (std::size_t i = 0; i < row.criteria_fired.size(); ++i)
    os << (i ? "," : "") << nilpotent::to_string(row.criteria_fired[i]);
  return os.str();
}

}  // namespace evoperm::report
