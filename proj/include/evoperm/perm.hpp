#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace evoperm {

/// A bijection of {1..n} stored in one-line image notation. Points are
/// 1-indexed everywhere: p(i) is the image of i.
class Permutation {
 public:
  /// Throws ValidationError unless `images` is a bijection of {1..n}, n >= 1.
  explicit Permutation(std::vector<std::size_t> images);
  Permutation(std::initializer_list<std::size_t> images)
      : Permutation(std::vector<std::size_t>(images)) {}

  static Permutation identity(std::size_t n);

  /// Builds a permutation of degree n from disjoint cycles (1-indexed); points
  /// not mentioned are fixed.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i - 1]; }
  const std::vector<std::size_t>& images() const { return images_; }

  bool is_identity() const;
  /// True when the permutation is one cycle through all n points.
  bool is_full_cycle() const;

  /// "[3,1,4,2]"
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// Cycles of a permutation, each rotated to start at its least point and the
/// list sorted by those least points. Fixed points appear as 1-cycles.
struct CycleDecomposition {
  std::vector<std::vector<std::size_t>> cycles;

  std::string str() const;
  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

/// Apply q first, then p: result(i) = p(q(i)). Throws ValidationError on a
/// degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
CycleDecomposition cycles(const Permutation& p);
std::vector<std::size_t> fixed_points(const Permutation& p);

}  // namespace evoperm
