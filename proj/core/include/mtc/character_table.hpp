#pragma once

#include <cstdint>
#include <vector>

#include "mtc/matrix.hpp"
#include "mtc/perm.hpp"
#include "mtc/perm_group.hpp"

namespace mtc {

// Complex character table of a finite permutation group. Rows are sorted by
// dimension, then lexicographically on rounded character values, so the
// table is deterministic for a fixed seed.
struct CharacterTable {
  std::vector<Perm> class_reps;
  std::vector<std::size_t> class_sizes;
  std::vector<std::vector<Complex>> chi;  // chi[irrep][class]
  std::vector<std::int64_t> dims;         // chi[i][identity class], rounded

  std::size_t num_classes() const { return class_reps.size(); }
  // max over row/column orthogonality defects
  double orthogonality_residual() const;
};

// Burnside-Dixon in floating point: simultaneous diagonalization of the
// class-sum matrices via a random linear combination. Retries with fresh
// random coefficients when the spectrum fails to separate; hard error after
// 32 attempts. Guarded to |G| <= 10080.
CharacterTable character_table(const PermGroup& g, std::uint64_t seed = 0);

}  // namespace mtc
