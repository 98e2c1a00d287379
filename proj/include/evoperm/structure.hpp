#pragma once

#include <cstddef>
#include <vector>

#include "evoperm/algebra.hpp"

namespace evoperm::structure {

/// Basis relabeling e'_i = e_{assignment[i-1]}: target index i (1-based) to
/// source index.
struct BasisMap {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::vector<std::size_t> assignment;

  std::size_t operator()(std::size_t target_index) const { return assignment[target_index - 1]; }
  bool is_bijective() const;

  friend bool operator==(const BasisMap&, const BasisMap&) = default;
};

/// One summand: the parent's indices `support` (in pi-cycle order) carried
/// onto 1..k of `algebra` by `map`.
struct Block {
  std::vector<std::size_t> support;
  PermEvolutionAlgebra algebra;
  BasisMap map;

  friend bool operator==(const Block&, const Block&) = default;
};

struct Decomposition {
  std::vector<Block> blocks;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Splits the algebra into one summand per common cycle support of pi and
/// tau. Each block relabels its support along the pi-cycle starting at the
/// least index, so the block's pi becomes (1 2 ... k).
///
/// Throws PreconditionError when a coefficient is zero or when the cycle
/// supports of pi and tau do not form the same partition (the message names
/// the interleaving supports).
Decomposition decompose(const PermEvolutionAlgebra& algebra);

/// Direct sum of the blocks, written back on the parent's indices.
PermEvolutionAlgebra reassemble(const Decomposition& decomposition);

struct CanonicalForm {
  PermEvolutionAlgebra algebra;
  BasisMap map;
};

/// pi a full n-cycle, tau = id: relabel by e'_i = e_{pi^{i-1}(1)} so that
/// pi* = (1 2 ... n), tau* = id and e'_i^2 = a_pi e'_{i+1} + a_tau e'_i
/// (indices mod n).
CanonicalForm canonical_cycle_identity(const PermEvolutionAlgebra& algebra);

/// pi a full n-cycle, tau = pi^{-1}: same relabeling, giving
/// pi* = (1 2 ... n), tau* = (1 n n-1 ... 2) and
/// e'_i^2 = a_pi e'_{i+1} + a_tau e'_{i-1} (indices mod n).
CanonicalForm canonical_inverse_pair(const PermEvolutionAlgebra& algebra);

/// True iff transporting every product e'_i e'_j of `target` through `map`
/// reproduces the product of the mapped basis vectors in `source`, exactly.
/// Throws std::invalid_argument on a dimension mismatch or non-bijective map.
bool verify_isomorphism(const PermEvolutionAlgebra& source, const PermEvolutionAlgebra& target, const BasisMap& map);

/// Same check for a block embedded in its parent (map need not be onto).
bool verify_embedding(const PermEvolutionAlgebra& parent, const Block& block);

/// Coordinates of x (given in the source basis) in the target basis:
/// y_i = x_{map(i)}.
Element pull_back(const BasisMap& map, const Element& x);

}  // namespace evoperm::structure
