#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mtc/matrix.hpp"
#include "mtc/rational.hpp"

namespace mtc {

// Matrix residual tolerance for the modular checks.
inline constexpr double kEpsModular = 1e-9;
// Tolerance for rounding Verlinde sums and other integer-valued quantities.
inline constexpr double kEpsInteger = 1e-6;

struct Label {
  std::size_t index = 0;
  std::string name;
};

// Genus-0 chiral data of one rational theory: labels, S-matrix, conformal
// weights mod 1 and central charge. Immutable by convention once built.
struct ModularData {
  std::string name;
  std::vector<std::string> labels;  // unique display names, index = position
  std::size_t vacuum = 0;
  CMatrix s;
  std::vector<Rational> weights;  // reduced into [0, 1)
  Rational central_charge;

  std::size_t rank() const { return labels.size(); }
  Label label(std::size_t i) const { return Label{i, labels[i]}; }
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double residual = 0.0;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  double worst_residual() const;
  std::string summary() const;
};

// d(lambda) = S_{lambda,vac} / S_{vac,vac}. Throws data_invalid if the vacuum
// row is not strictly positive real.
std::vector<double> quantum_dims(const ModularData& md);

// Global index mu = 1 / |S_{vac,vac}|^2 = sum of d(lambda)^2.
double mu_index(const ModularData& md);

// Involution pi with S^2 = permutation matrix of pi; pi(vac) = vac.
std::vector<std::size_t> conjugation(const ModularData& md);

// Phase invariant c0 in [0, 8) of the Gauss sum a = sum d^2 exp(-2 pi i Delta),
// a = |a| exp(-2 pi i c0 / 8). Throws degenerate_gauss_sum if |a| vanishes.
double gauss_sum_c0(const ModularData& md);

// T = exp(-2 pi i c0/24) Diag(exp(2 pi i Delta)), built from the Gauss-sum c0
// rather than the supplied central charge.
CMatrix t_matrix(const ModularData& md);

// Runs the eight modular checks: symmetry, unitarity, vacuum-row-positivity,
// S^2-is-conjugation, STS-relation, T-conjugation-commute,
// Verlinde-integrality, Gauss-sum-modulus.
ValidationReport validate(const ModularData& md);

// Throws data_invalid unless validate(md) passes everything.
void require_valid(const ModularData& md);

}  // namespace mtc
