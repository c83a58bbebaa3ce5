#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mtc/matrix.hpp"
#include "mtc/modular_data.hpp"
#include "mtc/rational.hpp"

namespace mtc {

// Non-negative integer structure constants N_{ab}^c over a label set.
struct FusionRing {
  std::vector<std::string> labels;
  std::size_t vacuum = 0;
  std::vector<std::int64_t> n;  // rank^3, row-major (a, b, c)

  std::size_t rank() const { return labels.size(); }
  std::int64_t coeff(std::size_t a, std::size_t b, std::size_t c) const {
    return n[(a * labels.size() + b) * labels.size() + c];
  }
  std::int64_t& coeff(std::size_t a, std::size_t b, std::size_t c) {
    return n[(a * labels.size() + b) * labels.size() + c];
  }
};

// N_{ab}^c = sum_d S_{ad} S_{bd} S*_{cd} / S_{vac,d}, rounded. Throws
// not_modular (naming the triple) if a raw value is farther than kEpsInteger
// from a non-negative integer.
FusionRing verlinde_fusion(const ModularData& md);

// Exact integer checks on the ring axioms.
bool fusion_is_commutative(const FusionRing& fr);
bool fusion_has_unit(const FusionRing& fr);
bool fusion_conjugation_ok(const FusionRing& fr, const std::vector<std::size_t>& conj);
bool fusion_is_associative(const FusionRing& fr);

// Y_{ab} = sum_c N_{ab}^c (omega_a omega_b / omega_c) d(c) with
// omega = exp(2 pi i Delta).
CMatrix y_matrix(const FusionRing& fr, const std::vector<Rational>& weights,
                 const std::vector<double>& dims);

}  // namespace mtc
