#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mtc/fusion.hpp"
#include "mtc/matrix.hpp"
#include "mtc/modular_data.hpp"
#include "mtc/rational.hpp"

namespace mtc {

// Sector label of the Z2 permutation orbifold of a theory with labels L:
//   pair  (a b), a < b   -- off-diagonal untwisted
//   diag  ~(a e), e=0,1  -- diagonal untwisted split into two summands
//   twist ^(a e), e=0,1  -- twisted
struct OrbifoldLabelZ2 {
  enum class Family { pair, diag, twist };
  Family family = Family::pair;
  std::size_t a = 0;  // base label (pair: smaller label)
  std::size_t b = 0;  // pair: larger label; diag/twist: epsilon in {0,1}

  std::string display(const std::vector<std::string>& base_labels) const;

  friend bool operator==(const OrbifoldLabelZ2& x, const OrbifoldLabelZ2& y) {
    return x.family == y.family && x.a == y.a && x.b == y.b;
  }
};

struct PMatrix {
  CMatrix p;        // T^{1/2} S T^2 S T^{1/2}, lifts Delta in [0,1), c0 in [0,8)
  CMatrix p_tilde;  // exp(2 pi i (c - c0)/8) * p
  double c0 = 0.0;
};

// Label inventory in the fixed order: pairs (lexicographic), then diagonals
// (label-major, epsilon-minor), then twists. m(m-1)/2 + 2m + 2m entries.
std::vector<OrbifoldLabelZ2> z2_labels(const ModularData& md);

// Index of ~(vacuum, eps) within z2_labels(md).
std::size_t z2_vacuum_index(const ModularData& md, int eps = 0);

PMatrix p_matrix(const ModularData& md);

// Full S-matrix of the orbifold in the z2_labels order. The twisted-twisted
// block uses the c-corrected P-tilde. Throws inconsistency if the result is
// not unitary, which is where lift or convention bugs surface.
CMatrix z2_s_matrix(const ModularData& md);

// Weights (pair: Da+Db, diag: 2Da, twist: Da/2 + c/16 + e/2, all mod 1) and
// the doubled central charge.
std::pair<std::vector<Rational>, Rational> z2_weights(const ModularData& md);

// Fusion ring straight from the closed-form rules, no Verlinde sum over the
// orbifold S-matrix. Throws inconsistency naming the first non-integer triple.
FusionRing z2_closed_form_fusion(const ModularData& md);

// Assembles the orbifold as plain ModularData and verifies: the eight
// modular checks, Verlinde == closed form coefficient-for-coefficient,
// c0(orbifold) == 2 c0 mod 8, and mu == 4 mu^2. Throws on any failure with
// the validation report in the message.
ModularData z2_assemble(const ModularData& md);

// +1 on untwisted labels, -1 on twisted ones, read off the assembled data as
// the ratio of the ~(vac,1) and ~(vac,0) rows of S.
std::vector<int> z2_grading(const ModularData& orb);

struct IntegralityRow {
  std::size_t l1 = 0, l2 = 0, l3 = 0;
  int sign = +1;
  double value = 0.0;
  std::int64_t rounded = 0;
  double residual = 0.0;
  bool integral = false;
  bool non_negative = false;
};

// Both sign choices of
//   1/2 sum_m S_{l1 m}^2 S_{l2 m} S*_{l3 m} / S_{vac m}^2
//   +- 1/2 sum_m S_{l1 m} P~_{l2 m} P~*_{l3 m} / S_{vac m}
// for every label triple. Failures are rows, not exceptions.
std::vector<IntegralityRow> integrality_report(const ModularData& md);

}  // namespace mtc
