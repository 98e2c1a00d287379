#include "evoperm/nilpotent.hpp"

#include <stdexcept>

namespace evoperm::nilpotent {

namespace {

enum class Link { Vanishes, ForcesLeft, ForcesRight, ForcesBoth, Positive };

Link classify_link(const SquareEquation& eq) {
  const int l = eq.left_coef.sign();
  const int r = eq.right_coef.sign();
  if (l == 0 && r == 0) return Link::Vanishes;
  if (r == 0) return Link::ForcesLeft;
  if (l == 0) return Link::ForcesRight;
  return l * r < 0 ? Link::Positive : Link::ForcesBoth;
}

// u_right / u_left along a positive link.
Rational step_ratio(const SquareEquation& eq) { return -eq.left_coef / eq.right_coef; }

Family chain_family(const CycleSystem& system, std::size_t start, std::size_t length) {
  const std::size_t p = system.cycle.size();
  Family f;
  Rational r2 = 1;
  for (std::size_t m = 0; m < length; ++m) {
    const std::size_t pos = (start + m) % p;
    f.support.push_back(system.cycle[pos]);
    f.ratios.push_back(sqrt_normalize(r2));
    if (m + 1 < length) r2 *= step_ratio(system.equations[pos]);
  }
  return f;
}

}  // namespace

std::vector<std::size_t> CycleSolution::free_coordinates() const {
  std::vector<std::size_t> out;
  if (kind != SolutionKind::FreeCoordinate) return out;
  for (const auto& f : families) out.push_back(f.support.front());
  return out;
}

std::vector<Criterion> NilpotentReport::criteria_fired() const {
  std::vector<Criterion> out;
  for (const auto& c : criteria)
    if (c.certifies()) out.push_back(c.criterion);
  return out;
}

std::string to_string(SolutionKind kind) {
  switch (kind) {
    case SolutionKind::TrivialOnly: return "trivial-only";
    case SolutionKind::FreeCoordinate: return "free-coordinate";
    case SolutionKind::OneParamFamily: return "one-parameter-family";
    case SolutionKind::SegmentFamilies: return "segment-families";
  }
  return "?";
}

std::string to_string(Criterion criterion) {
  switch (criterion) {
    case Criterion::Nonsingular: return "nonsingular";
    case Criterion::CorankOneMinors: return "corank-one-minors";
    case Criterion::SignProducts: return "sign-products";
    case Criterion::CorankTwoCoefficients: return "corank-two-coefficients";
  }
  return "?";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Certified: return "certified";
    case Verdict::NotCertified: return "not-certified";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

std::vector<CycleSystem> squared_system(const PermEvolutionAlgebra& algebra) {
  std::vector<CycleSystem> out;
  for (auto& cycle : cycles(algebra.j_map()).cycles) {
    CycleSystem cs;
    const std::size_t p = cycle.size();
    for (std::size_t k = 0; k < p; ++k) {
      const std::size_t l = cycle[k];
      const std::size_t next = cycle[(k + 1) % p];
      cs.equations.push_back({algebra.pi()(l), l, algebra.a_pi(l), next, algebra.a_tau(next)});
    }
    cs.cycle = std::move(cycle);
    out.push_back(std::move(cs));
  }
  return out;
}

CycleSolution solve_cycle(const CycleSystem& system) {
  const std::size_t p = system.cycle.size();
  CycleSolution sol;
  sol.cycle = system.cycle;

  std::vector<Link> links(p);
  std::vector<bool> forced(p, false);
  bool all_positive = true;
  for (std::size_t k = 0; k < p; ++k) {
    links[k] = classify_link(system.equations[k]);
    const std::size_t next = (k + 1) % p;
    switch (links[k]) {
      case Link::ForcesLeft: forced[k] = true; break;
      case Link::ForcesRight: forced[next] = true; break;
      case Link::ForcesBoth: forced[k] = forced[next] = true; break;
      default: break;
    }
    all_positive = all_positive && links[k] == Link::Positive;
  }

  if (all_positive) {
    // Going once around the ring must return to the starting value.
    Rational closure = 1;
    for (const auto& eq : system.equations) closure *= step_ratio(eq);
    if (closure == Rational{1}) {
      sol.kind = SolutionKind::OneParamFamily;
      sol.families.push_back(chain_family(system, 0, p));
      sol.sign_freedom = true;
    } else {
      sol.note = "closure product " + closure.str() + " != 1";
    }
    return sol;
  }

  // A zero propagates through positive links in both directions.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < p; ++k) {
      if (links[k] != Link::Positive) continue;
      const std::size_t next = (k + 1) % p;
      if (forced[k] != forced[next]) {
        forced[k] = forced[next] = true;
        changed = true;
      }
    }
  }

  // Segments are maximal runs joined by positive links; start right after a
  // break so none wraps around.
  std::size_t brk = 0;
  while (links[brk] == Link::Positive) ++brk;
  const std::size_t first = (brk + 1) % p;
  bool isolated_only = true;
  for (std::size_t walked = 0; walked < p;) {
    const std::size_t start = (first + walked) % p;
    std::size_t length = 1;
    while (links[(start + length - 1) % p] == Link::Positive) ++length;
    if (!forced[start]) {
      sol.families.push_back(chain_family(system, start, length));
      isolated_only = isolated_only && length == 1;
    }
    walked += length;
  }

  if (sol.families.empty()) return sol;
  sol.sign_freedom = true;
  sol.kind = isolated_only ? SolutionKind::FreeCoordinate : SolutionKind::SegmentFamilies;
  return sol;
}

NilpotentReport solve(const PermEvolutionAlgebra& algebra) {
  NilpotentReport report;
  for (const auto& cs : squared_system(algebra)) {
    report.per_cycle.push_back(solve_cycle(cs));
    report.unique = report.unique && report.per_cycle.back().kind == SolutionKind::TrivialOnly;
  }
  report.criteria = {uniqueness_by_det(algebra), uniqueness_rank_n1(algebra), uniqueness_sign(algebra),
                     uniqueness_rank_n2(algebra)};
  return report;
}

CriterionResult uniqueness_by_det(const PermEvolutionAlgebra& algebra) {
  CriterionResult res{Criterion::Nonsingular};
  const Rational d = det(algebra.system_matrix());
  res.verdict = d.is_zero() ? Verdict::NotCertified : Verdict::Certified;
  res.reason = "det = " + d.str();
  return res;
}

CriterionResult uniqueness_rank_n1(const PermEvolutionAlgebra& algebra) {
  CriterionResult res{Criterion::CorankOneMinors};
  const RationalMatrix s = algebra.system_matrix();
  const std::size_t n = algebra.dim();
  const std::size_t r = rank(s);
  if (r == n) {
    res.reason = "full rank";
    return res;
  }
  if (r + 1 != n) {
    res.reason = "rank " + std::to_string(r) + ", requires " + std::to_string(n - 1);
    return res;
  }
  const ReducedSystem red = reduced_coefficients(s, r);
  const Rational leading = det(red.leading_minor(s));
  for (std::size_t i = 0; i < r; ++i) {
    const Rational replaced = det(red.replaced_minor(s, i, 0));
    if ((replaced * leading).sign() > 0) {
      res.verdict = Verdict::Certified;
      res.minors = MinorPair{red.pivot_cols[i] + 1, red.free_cols[0] + 1, replaced, leading};
      res.reason = "det(M_" + std::to_string(red.pivot_cols[i] + 1) + "," + std::to_string(red.free_cols[0] + 1) +
                   ") * det(M_r) = " + res.minors->product().str() + " > 0";
      return res;
    }
  }
  res.verdict = Verdict::NotCertified;
  res.reason = "no minor product is positive";
  return res;
}

CriterionResult uniqueness_sign(const PermEvolutionAlgebra& algebra) {
  CriterionResult res{Criterion::SignProducts};
  const Permutation j = algebra.j_map();
  for (std::size_t k = 1; k <= algebra.dim(); ++k) {
    if ((algebra.a_pi(k) * algebra.a_tau(j(k))).sign() <= 0) {
      res.verdict = Verdict::NotCertified;
      res.reason = "product for k = " + std::to_string(k) + " is not positive";
      return res;
    }
  }
  res.verdict = Verdict::Certified;
  res.reason = "all products positive";
  return res;
}

std::optional<std::size_t> positive_row(const RationalMatrix& coefficients) {
  for (std::size_t i = 0; i < coefficients.rows(); ++i) {
    bool all_positive = coefficients.cols() > 0;
    for (const auto& d : coefficients.row(i)) all_positive = all_positive && d.sign() > 0;
    if (all_positive) return i;
  }
  return std::nullopt;
}

CriterionResult uniqueness_rank_n2(const PermEvolutionAlgebra& algebra) {
  CriterionResult res{Criterion::CorankTwoCoefficients};
  const RationalMatrix s = algebra.system_matrix();
  const std::size_t n = algebra.dim();
  const std::size_t r = rank(s);
  if (r == n) {
    res.reason = "full rank";
    return res;
  }
  if (r + 2 != n) {
    res.reason = "rank " + std::to_string(r) + ", requires " + std::to_string(n - 2);
    return res;
  }
  const ReducedSystem red = reduced_coefficients(s, r);
  if (auto row = positive_row(red.coefficients)) {
    res.verdict = Verdict::Certified;
    res.certifying_variable = red.pivot_cols[*row] + 1;
    res.reason = "both reduced coefficients of x_" + std::to_string(*res.certifying_variable) + " are positive";
  } else {
    res.verdict = Verdict::NotCertified;
    res.reason = "no row of reduced coefficients is positive";
  }
  return res;
}

bool cone_oracle(const RationalMatrix& coefficients) {
  if (coefficients.cols() != 2) throw std::invalid_argument("cone test needs exactly two columns");
  std::vector<std::pair<Rational, Rational>> rays = {{1, 0}, {0, 1}};
  for (std::size_t i = 0; i < coefficients.rows(); ++i) {
    const Rational& d1 = coefficients(i, 0);
    const Rational& d2 = coefficients(i, 1);
    if (d1.sign() * d2.sign() < 0) rays.emplace_back(d2.abs(), d1.abs());
  }
  for (const auto& [u, v] : rays) {
    bool feasible = true;
    for (std::size_t i = 0; i < coefficients.rows() && feasible; ++i)
      feasible = (coefficients(i, 0) * u + coefficients(i, 1) * v).sign() <= 0;
    if (feasible) return true;
  }
  return false;
}

bool verify_nilpotent(const PermEvolutionAlgebra& algebra, const Element& x) {
  return square(algebra, x).is_zero();
}

bool verify_squares(const PermEvolutionAlgebra& algebra, const std::vector<Rational>& u) {
  if (u.size() != algebra.dim()) return false;
  for (const auto& v : u)
    if (v.sign() < 0) return false;
  const RationalMatrix s = algebra.system_matrix();
  for (std::size_t r = 0; r < s.rows(); ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < s.cols(); ++c) acc += s(r, c) * u[c];
    if (!acc.is_zero()) return false;
  }
  return true;
}

std::vector<Rational> square_witness(std::size_t dim, const Family& family, const Rational& t_squared) {
  std::vector<Rational> u(dim);
  for (std::size_t k = 0; k < family.support.size(); ++k) u[family.support[k] - 1] = family.ratios[k].squared() * t_squared;
  return u;
}

}  // namespace evoperm::nilpotent
