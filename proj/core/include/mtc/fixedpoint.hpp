#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mtc/character_table.hpp"
#include "mtc/perm_group.hpp"

namespace mtc {

// One element of the residual group Q acting on the character table of the
// centralizer: a permutation of the irrep indices plus a one-dimensional
// twist character (given by its irrep index).
struct QElement {
  std::vector<std::size_t> action;  // permutation of chartable rows
  std::size_t twist = 0;            // row index of a 1-dim character
};

// Finite data behind a fixed-point resolution count: the centralizer's
// character table, a chosen irrep sigma, and the residual group Q as an
// abstract composition table with per-element action and twist assignments.
struct ResolutionInput {
  PermGroup gc;
  CharacterTable table;
  std::size_t sigma = 0;
  std::vector<QElement> q;
  std::vector<std::vector<std::size_t>> compose;  // compose[x][y] = index of x*y
};

// {h in Q : sigma^h = sigma * twist_h}, returned as indices into q.
// Verifies that compose is a group table and that action/twist are
// homomorphic in h, then that the result is a subgroup; failures raise
// inconsistency.
std::vector<std::size_t> fixed_set(const ResolutionInput& inp);

// |fixed_set| when the fixed set is cyclic; non-cyclic fixed sets are
// unsupported (the cocycle is not derivable from these inputs).
std::size_t resolution_count(const ResolutionInput& inp);

struct H8Row {
  int sigma_exponent = 0;  // 0, +1, -1, 2
  std::size_t count = 0;
};

// Quaternion-orbifold preset: Gc = Z4 with irreps labeled by exponents
// (0, +1, -1, 2), Q = Z2 inverting exponents, twist exponent 2*k1 mod 4.
std::vector<H8Row> h8_example(std::int64_t k1);

// JSON document: {"group": spec, "sigma": [[re,im]...], "elements":
// [{"action":[...], "twist":[[re,im]...]}...], "compose": [[...]...]},
// character values listed in chartable class order. "compose" may be omitted
// when the (action, twist) pairs are pairwise distinct; it is then derived.
ResolutionInput parse_resolution_input(std::string_view text, std::uint64_t seed = 0);

}  // namespace mtc
