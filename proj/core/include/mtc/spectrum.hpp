#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mtc/modular_data.hpp"
#include "mtc/perm.hpp"
#include "mtc/perm_group.hpp"

namespace mtc {

enum class OrbifoldGroup { cyclic, full };

// A permutation p together with one base-theory label per canonical cycle.
struct SectorSeed {
  Perm p;
  std::vector<std::size_t> psi;  // indexed like cycle_decompose(p)
};

// One irreducible sector of the n-fold orbifold: orbit representative,
// its joint stabilizer, an irrep of the stabilizer, and the quantum
// dimension chi_sigma(1) * d(pi) * |G| / |stab|.
struct SpectrumEntry {
  SectorSeed seed;
  PermGroup stabilizer;
  std::size_t sigma = 0;
  std::int64_t sigma_dim = 1;
  double dim = 0.0;
  std::size_t orbit_size = 1;
};

// d(pi_{psi,p}) = prod_cycles d(psi(c)) * mu^{(n-k)/2}, k = number of cycles.
double soliton_dim(const SectorSeed& seed, const ModularData& md);

struct SpectrumOptions {
  std::uint64_t seed = 0;        // character-table random splitting
  bool override_guard = false;   // lift the n-guards (slow)
};

// Enumerates the (psi, p, sigma) sectors up to simultaneous conjugation.
// Guards: n <= 5 for the full group, n <= 8 for the cyclic one.
std::vector<SpectrumEntry> enumerate_spectrum(const ModularData& md, std::size_t n,
                                              OrbifoldGroup group,
                                              const SpectrumOptions& opts = {});

// Independent recount through the quantum-double labels: psi-orbits first,
// then (g, irrep-of-centralizer) pairs over the stabilizer of psi. Throws
// inconsistency if it disagrees with enumerate_spectrum.
std::size_t ba_label_count(const ModularData& md, std::size_t n, OrbifoldGroup group,
                           const SpectrumOptions& opts = {});

// sum_d S_{vac,d}^{2-2g} prod_i (S_{l_i d} / S_{vac,d}), rounded to an
// integer. Throws inconsistency when the sum is not close to a non-negative
// integer.
std::int64_t genus_blocks(const ModularData& md, const std::vector<std::size_t>& insertions,
                          std::size_t genus);

struct PhaseIdentityRow {
  std::size_t lam = 0, mu = 0, delta = 0;
  std::int64_t lhs = 0;  // N^{(delta 0)} - N^{(delta 1)} in the orbifold
  std::int64_t rhs = 0;  // N_{lam mu}^{delta} in the base theory
  bool ok = false;
};

// Checks N_{(l0)(m0)}^{(d0)} - N_{(l0)(m0)}^{(d1)} = N_{lm}^d for every base
// triple, with the orbifold side computed by Verlinde on the assembled data.
std::vector<PhaseIdentityRow> cyclic_phase_identity(const ModularData& orbifold,
                                                    const ModularData& base);

}  // namespace mtc
