#include "evoperm/perm.hpp"

#include <algorithm>
#include <sstream>

#include "evoperm/error.hpp"

namespace evoperm {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  const std::size_t n = images_.size();
  if (n == 0) throw ValidationError("permutation of degree 0");
  std::vector<std::size_t> seen_at(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t v = images_[i - 1];
    if (v < 1 || v > n) {
      throw ValidationError("image of " + std::to_string(i) + " is " + std::to_string(v) +
                            ", outside 1.." + std::to_string(n));
    }
    if (seen_at[v] != 0) {
      throw ValidationError("image " + std::to_string(v) + " repeated at positions " +
                            std::to_string(seen_at[v]) + " and " + std::to_string(i));
    }
    seen_at[v] = i;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i + 1;
  std::vector<bool> used(n + 1, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      std::size_t from = cycle[k];
      if (from < 1 || from > n || used[from]) {
        throw ValidationError("cycles are not disjoint over 1.." + std::to_string(n));
      }
      used[from] = true;
      images[from - 1] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

bool Permutation::is_full_cycle() const {
  std::size_t len = 1;
  for (std::size_t x = (*this)(1); x != 1; x = (*this)(x)) ++len;
  return len == degree();
}

std::string Permutation::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? "," : "") << images_[i];
  os << ']';
  return os.str();
}

std::string CycleDecomposition::str() const {
  std::ostringstream os;
  for (const auto& c : cycles) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw ValidationError("cannot compose permutations of degree " + std::to_string(p.degree()) + " and " +
                          std::to_string(q.degree()));
  }
  std::vector<std::size_t> images(p.degree());
  for (std::size_t i = 1; i <= p.degree(); ++i) images[i - 1] = p(q(i));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<std::size_t> images(p.degree());
  for (std::size_t i = 1; i <= p.degree(); ++i) images[p(i) - 1] = i;
  return Permutation(std::move(images));
}

CycleDecomposition cycles(const Permutation& p) {
  CycleDecomposition out;
  std::vector<bool> visited(p.degree() + 1, false);
  // Scanning points in increasing order starts each cycle at its minimum and
  // emits cycles sorted by minimum.
  for (std::size_t start = 1; start <= p.degree(); ++start) {
    if (visited[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t x = start; !visited[x]; x = p(x)) {
      visited[x] = true;
      cycle.push_back(x);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

std::vector<std::size_t> fixed_points(const Permutation& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= p.degree(); ++i)
    if (p(i) == i) out.push_back(i);
  return out;
}

}  // namespace evoperm
