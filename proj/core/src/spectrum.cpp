#include "mtc/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "mtc/character_table.hpp"
#include "mtc/error.hpp"
#include "mtc/fusion.hpp"

namespace mtc {

namespace {

PermGroup orbifold_group(std::size_t n, OrbifoldGroup kind) {
  return kind == OrbifoldGroup::cyclic ? PermGroup::cyclic(n) : PermGroup::symmetric(n);
}

void check_guard(std::size_t n, OrbifoldGroup kind, const SpectrumOptions& opts) {
  if (opts.override_guard) return;
  if (kind == OrbifoldGroup::full && n > 5)
    fail(errc::size_guard, "spectrum: n > 5 for the full permutation group (override to force)");
  if (kind == OrbifoldGroup::cyclic && n > 8)
    fail(errc::size_guard, "spectrum: n > 8 for the cyclic group (override to force)");
}

// (p, psi) with psi stored per point; constant on cycles of p by construction.
struct Seed {
  std::vector<std::size_t> p;
  std::vector<std::size_t> psi;

  friend bool operator==(const Seed& a, const Seed& b) = default;
  friend auto operator<=>(const Seed& a, const Seed& b) = default;
};

Seed act_seed(const Perm& h, const Seed& s) {
  // p' = h p h^{-1} via p'(h(x)) = h(p(x)); psi'(h(x)) = psi(x)
  const std::size_t n = s.p.size();
  Seed out;
  out.p.resize(n);
  out.psi.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    out.p[h(x)] = h(s.p[x]);
    out.psi[h(x)] = s.psi[x];
  }
  return out;
}

// character tables of stabilizers repeat heavily; cache them by element set
using TableCache = std::map<std::vector<std::vector<std::size_t>>, CharacterTable>;

const CharacterTable& cached_table(TableCache& cache, const PermGroup& g, std::uint64_t seed) {
  std::vector<std::vector<std::size_t>> key;
  key.reserve(g.order());
  for (const Perm& e : g.elements()) key.push_back(e.images());
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(std::move(key), character_table(g, seed)).first;
  return it->second;
}

}  // namespace

double soliton_dim(const SectorSeed& seed, const ModularData& md) {
  const std::vector<double> d = quantum_dims(md);
  const std::vector<Cycle> cycles = cycle_decompose(seed.p);
  if (cycles.size() != seed.psi.size())
    fail(errc::shape_error, "psi must assign one label per cycle");
  double prod = 1.0;
  for (std::size_t i = 0; i < cycles.size(); ++i) prod *= d[seed.psi[i]];
  const double mu = mu_index(md);
  const double expo = 0.5 * static_cast<double>(seed.p.degree() - cycles.size());
  return prod * std::pow(mu, expo);
}

std::vector<SpectrumEntry> enumerate_spectrum(const ModularData& md, std::size_t n,
                                              OrbifoldGroup group, const SpectrumOptions& opts) {
  if (n < 2) fail(errc::size_guard, "spectrum: n must be >= 2");
  check_guard(n, group, opts);
  const std::size_t m = md.rank();
  const PermGroup g = orbifold_group(n, group);
  const std::vector<double> dims = quantum_dims(md);
  const double mu = mu_index(md);

  TableCache cache;
  std::vector<SpectrumEntry> out;

  std::vector<std::size_t> coloring;
  for (const Perm& p : g.elements()) {
    const std::vector<Cycle> cycles = cycle_decompose(p);
    const std::size_t k = cycles.size();
    coloring.assign(k, 0);
    while (true) {
      Seed s;
      s.p = p.images();
      s.psi.resize(n);
      for (std::size_t ci = 0; ci < k; ++ci)
        for (std::size_t pt : cycles[ci]) s.psi[pt] = coloring[ci];

      // keep only canonical (minimal) orbit representatives
      bool canonical = true;
      std::vector<Perm> stab_elems;
      std::set<Seed> orbit;
      for (const Perm& h : g.elements()) {
        Seed t = act_seed(h, s);
        if (t < s) {
          canonical = false;
          break;
        }
        if (t == s) stab_elems.push_back(h);
        orbit.insert(std::move(t));
      }
      if (canonical) {
        PermGroup stab = PermGroup::from_elements(n, std::move(stab_elems));
        const std::size_t orbit_size = orbit.size();
        if (orbit_size * stab.order() != g.order())
          fail(errc::inconsistency, "orbit-stabilizer identity violated in spectrum enumeration");

        SectorSeed seed{p, coloring};
        double dpi = std::pow(mu, 0.5 * static_cast<double>(n - k));
        for (std::size_t ci = 0; ci < k; ++ci) dpi *= dims[coloring[ci]];
        const CharacterTable& table = cached_table(cache, stab, opts.seed);
        for (std::size_t irr = 0; irr < table.num_classes(); ++irr) {
          SpectrumEntry entry;
          entry.seed = seed;
          entry.stabilizer = stab;
          entry.sigma = irr;
          entry.sigma_dim = table.dims[irr];
          entry.orbit_size = orbit_size;
          entry.dim = static_cast<double>(table.dims[irr]) * dpi *
                      static_cast<double>(orbit_size);
          out.push_back(std::move(entry));
        }
      }

      // next coloring
      std::size_t pos = 0;
      while (pos < k && ++coloring[pos] == m) {
        coloring[pos] = 0;
        ++pos;
      }
      if (pos == k) break;
    }
  }
  return out;
}

std::size_t ba_label_count(const ModularData& md, std::size_t n, OrbifoldGroup group,
                           const SpectrumOptions& opts) {
  if (n < 2) fail(errc::size_guard, "spectrum: n must be >= 2");
  check_guard(n, group, opts);
  const std::size_t m = md.rank();
  const PermGroup g = orbifold_group(n, group);

  std::size_t total = 0;
  std::vector<std::size_t> psi(n, 0);
  while (true) {
    // canonical representative of the psi-orbit under relabeling of points
    bool canonical = true;
    for (const Perm& h : g.elements()) {
      std::vector<std::size_t> moved(n);
      for (std::size_t x = 0; x < n; ++x) moved[h(x)] = psi[x];
      if (moved < psi) {
        canonical = false;
        break;
      }
    }
    if (canonical) {
      // F_psi = {p in G : p.psi = psi}, then irreps of the double D(F_psi):
      // conjugacy classes [g] paired with irreps of the centralizer of g
      std::vector<Perm> stab_elems;
      for (const Perm& h : g.elements()) {
        bool fixes = true;
        for (std::size_t x = 0; x < n && fixes; ++x) fixes = psi[h(x)] == psi[x];
        if (fixes) stab_elems.push_back(h);
      }
      const PermGroup f_psi = PermGroup::from_elements(n, std::move(stab_elems));
      for (const auto& cls : conjugacy_classes(f_psi)) {
        const PermGroup cent = centralizer(f_psi, cls[0]);
        total += conjugacy_classes(cent).size();
      }
    }

    std::size_t pos = 0;
    while (pos < n && ++psi[pos] == m) {
      psi[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
  }

  const std::size_t direct = enumerate_spectrum(md, n, group, opts).size();
  if (total != direct)
    fail(errc::inconsistency, "quantum-double label count " + std::to_string(total) +
                                  " disagrees with the spectrum count " + std::to_string(direct));
  return total;
}

std::int64_t genus_blocks(const ModularData& md, const std::vector<std::size_t>& insertions,
                          std::size_t genus) {
  const std::size_t m = md.rank();
  for (std::size_t l : insertions)
    if (l >= m) fail(errc::shape_error, "insertion label out of range");
  quantum_dims(md);  // enforces vacuum-row positivity
  const double expo = 2.0 - 2.0 * static_cast<double>(genus);
  Complex acc{};
  for (std::size_t d = 0; d < m; ++d) {
    const double svac = md.s(md.vacuum, d).real();
    Complex term = std::pow(svac, expo);
    for (std::size_t l : insertions) term *= md.s(l, d) / svac;
    acc += term;
  }
  const std::int64_t r = std::llround(acc.real());
  if (std::abs(acc - Complex{static_cast<double>(r), 0.0}) > kEpsInteger || r < 0)
    fail(errc::inconsistency, "genus-block sum is not a non-negative integer");
  return r;
}

std::vector<PhaseIdentityRow> cyclic_phase_identity(const ModularData& orbifold,
                                                    const ModularData& base) {
  const std::size_t m = base.rank();
  const std::size_t pairs = m * (m - 1) / 2;
  if (orbifold.rank() != pairs + 4 * m)
    fail(errc::shape_error, "orbifold data does not look like a Z2 orbifold of the base theory");
  const FusionRing orb_fr = verlinde_fusion(orbifold);
  const FusionRing base_fr = verlinde_fusion(base);
  auto diag0 = [&](std::size_t l) { return pairs + 2 * l; };

  std::vector<PhaseIdentityRow> rows;
  rows.reserve(m * m * m);
  for (std::size_t l = 0; l < m; ++l) {
    for (std::size_t mu = 0; mu < m; ++mu) {
      for (std::size_t d = 0; d < m; ++d) {
        PhaseIdentityRow row;
        row.lam = l;
        row.mu = mu;
        row.delta = d;
        row.lhs = orb_fr.coeff(diag0(l), diag0(mu), diag0(d)) -
                  orb_fr.coeff(diag0(l), diag0(mu), diag0(d) + 1);
        row.rhs = base_fr.coeff(l, mu, d);
        row.ok = row.lhs == row.rhs;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

}  // namespace mtc
