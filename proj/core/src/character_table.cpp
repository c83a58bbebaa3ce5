#include "mtc/character_table.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "mtc/error.hpp"

namespace mtc {

double CharacterTable::orthogonality_residual() const {
  const std::size_t k = num_classes();
  std::size_t order = 0;
  for (std::size_t s : class_sizes) order += s;
  double worst = 0.0;
  // rows
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Complex acc{};
      for (std::size_t c = 0; c < k; ++c)
        acc += static_cast<double>(class_sizes[c]) * chi[i][c] * std::conj(chi[j][c]);
      acc -= (i == j) ? Complex{static_cast<double>(order), 0.0} : Complex{};
      worst = std::max(worst, std::abs(acc) / static_cast<double>(order));
    }
  }
  // columns
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t c2 = 0; c2 < k; ++c2) {
      Complex acc{};
      for (std::size_t i = 0; i < k; ++i) acc += chi[i][c] * std::conj(chi[i][c2]);
      const double target =
          (c == c2) ? static_cast<double>(order) / static_cast<double>(class_sizes[c]) : 0.0;
      acc -= Complex{target, 0.0};
      worst = std::max(worst, std::abs(acc) / static_cast<double>(order));
    }
  }
  return worst;
}

CharacterTable character_table(const PermGroup& g, std::uint64_t seed) {
  if (g.order() > 10080) fail(errc::size_guard, "character_table: group order exceeds 10080");
  const std::vector<std::vector<Perm>> classes = conjugacy_classes(g);
  const std::size_t k = classes.size();
  const std::size_t order = g.order();

  std::vector<std::size_t> class_of(order);
  for (std::size_t c = 0; c < k; ++c)
    for (const Perm& x : classes[c]) class_of[g.element_index(x)] = c;

  // class multiplication coefficients a_ijk with K_i K_j = sum_k a_ijk K_k,
  // counted as pairs (x in C_i, y in C_j) with x y = rep_k. Stored as
  // class_mats[i](j, k) so that eigenvectors v with (A_i v)_j = sum_k a_ijk v_k
  // carry eigenvalue omega_i = |C_i| chi(g_i) / d.
  std::vector<Eigen::MatrixXd> class_mats(k, Eigen::MatrixXd::Zero(k, k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t kk = 0; kk < k; ++kk) {
      const Perm& rep = classes[kk][0];
      for (const Perm& x : classes[i]) {
        const Perm y = x.inverse() * rep;
        const std::size_t j = class_of[g.element_index(y)];
        class_mats[i](static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(kk)) += 1.0;
      }
    }
  }

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);

  for (int attempt = 0; attempt < 32; ++attempt) {
    Eigen::MatrixXcd combo = Eigen::MatrixXcd::Zero(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      const Complex r{unif(rng), unif(rng)};
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
          combo(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) +=
              r * class_mats[i](static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(combo);
    if (solver.info() != Eigen::Success) continue;

    bool separated = true;
    for (std::size_t a = 0; a < k && separated; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (std::abs(solver.eigenvalues()(static_cast<Eigen::Index>(a)) -
                     solver.eigenvalues()(static_cast<Eigen::Index>(b))) < 1e-7) {
          separated = false;
          break;
        }
    if (!separated) continue;

    CharacterTable table;
    table.class_reps.reserve(k);
    table.class_sizes.reserve(k);
    for (std::size_t c = 0; c < k; ++c) {
      table.class_reps.push_back(classes[c][0]);
      table.class_sizes.push_back(classes[c].size());
    }

    bool ok = true;
    for (std::size_t col = 0; col < k && ok; ++col) {
      Eigen::VectorXcd v = solver.eigenvectors().col(static_cast<Eigen::Index>(col));
      const Complex at_e = v(0);  // identity class is index 0
      if (std::abs(at_e) < 1e-12) {
        ok = false;
        break;
      }
      v /= at_e;  // now v_c = |C_c| chi(g_c) / d
      double inv_sum = 0.0;
      for (std::size_t c = 0; c < k; ++c)
        inv_sum += std::norm(v(static_cast<Eigen::Index>(c))) /
                   static_cast<double>(table.class_sizes[c]);
      const double dim_f = std::sqrt(static_cast<double>(order) / inv_sum);
      const std::int64_t dim = std::llround(dim_f);
      if (dim < 1 || std::abs(dim_f - static_cast<double>(dim)) > 1e-6) {
        ok = false;
        break;
      }
      std::vector<Complex> row(k);
      for (std::size_t c = 0; c < k; ++c)
        row[c] = v(static_cast<Eigen::Index>(c)) * static_cast<double>(dim) /
                 static_cast<double>(table.class_sizes[c]);
      table.chi.push_back(std::move(row));
      table.dims.push_back(dim);
    }
    if (!ok) continue;

    std::size_t dim_sq = 0;
    for (std::int64_t d : table.dims) dim_sq += static_cast<std::size_t>(d * d);
    if (dim_sq != order) continue;
    if (table.orthogonality_residual() > 1e-8) continue;

    // deterministic row order: dimension first, then rounded values
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i;
    auto key = [&](std::size_t i) {
      std::vector<std::pair<long, long>> vals;
      vals.reserve(k);
      for (const Complex& z : table.chi[i])
        vals.emplace_back(std::lround(z.real() * 1e6), std::lround(z.imag() * 1e6));
      return vals;
    };
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      if (table.dims[a] != table.dims[b]) return table.dims[a] < table.dims[b];
      return key(a) < key(b);
    });
    CharacterTable sorted = table;
    for (std::size_t i = 0; i < k; ++i) {
      sorted.chi[i] = table.chi[perm[i]];
      sorted.dims[i] = table.dims[perm[i]];
    }
    return sorted;
  }
  fail(errc::inconsistency,
       "character_table: eigenvector separation failed after 32 random combinations");
}

}  // namespace mtc
