#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "mtc/error.hpp"
#include "mtc/fusion.hpp"
#include "mtc/modular_data.hpp"
#include "mtc/theories.hpp"

using namespace mtc;

namespace {

// Independent 3-term Verlinde oracle over the Ising S-matrix, written from
// scratch against the raw entries rather than going through FusionRing.
long ising_verlinde_oracle(int a, int b, int c) {
  const double r = std::sqrt(2.0);
  const double s[3][3] = {{0.5, 0.5, 0.5 * r}, {0.5, 0.5, -0.5 * r}, {0.5 * r, -0.5 * r, 0.0}};
  double acc = 0.0;
  for (int d = 0; d < 3; ++d) acc += s[a][d] * s[b][d] * s[c][d] / s[0][d];
  return std::lround(acc);
}

std::vector<ModularData> builtins_for_tests() {
  std::vector<ModularData> out;
  out.push_back(builtin_trivial());
  out.push_back(builtin_ising());
  for (int k = 1; k <= 8; ++k) out.push_back(builtin_su2(k));
  return out;
}

}  // namespace

TEST_CASE("quantum dimensions of the built-ins") {
  // Ising: oracle ratio S_{sigma,1}/S_{11} = (sqrt(2)/2) / (1/2) = sqrt(2)
  const auto ising = builtin_ising();
  const auto d = quantum_dims(ising);
  CHECK(d[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(d[1] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(d[2] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));

  const auto su21 = builtin_su2(1);
  for (double x : quantum_dims(su21)) CHECK(x == doctest::Approx(1.0).epsilon(1e-9));

  for (const auto& md : builtins_for_tests()) CHECK(quantum_dims(md)[md.vacuum] == doctest::Approx(1.0));
}

TEST_CASE("quantum_dims rejects a non-positive vacuum row") {
  auto md = builtin_ising();
  md.s(0, 1) = -md.s(0, 1);
  CHECK_THROWS_AS(quantum_dims(md), Error);
}

TEST_CASE("mu-index equals the dimension-square sum") {
  CHECK(mu_index(builtin_su2(1)) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(mu_index(builtin_ising()) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(mu_index(builtin_trivial()) == doctest::Approx(1.0));
  for (const auto& md : builtins_for_tests()) {
    double sum = 0.0;
    for (double x : quantum_dims(md)) sum += x * x;
    CHECK(mu_index(md) == doctest::Approx(sum).epsilon(1e-9));
  }
}

TEST_CASE("conjugation from S^2") {
  // Ising and SU(2)_k have real symmetric S with S^2 = 1: identity permutation
  for (const auto& md : {builtin_ising(), builtin_su2(3)}) {
    const auto pi = conjugation(md);
    for (std::size_t i = 0; i < pi.size(); ++i) CHECK(pi[i] == i);
  }
  for (const auto& md : builtins_for_tests()) CHECK(conjugation(md)[md.vacuum] == md.vacuum);
}

TEST_CASE("conjugation rejects non-permutation S^2") {
  auto md = builtin_ising();
  md.s(2, 2) = 0.3;
  CHECK_THROWS_AS(conjugation(md), Error);
}

TEST_CASE("Verlinde fusion of Ising against the independent oracle") {
  const auto md = builtin_ising();
  const auto fr = verlinde_fusion(md);
  // N_{sigma sigma}^nu = (1, 1, 0), frozen from the 3-term sum
  CHECK(ising_verlinde_oracle(2, 2, 0) == 1);
  CHECK(ising_verlinde_oracle(2, 2, 1) == 1);
  CHECK(ising_verlinde_oracle(2, 2, 2) == 0);
  CHECK(fr.coeff(2, 2, 0) == 1);
  CHECK(fr.coeff(2, 2, 1) == 1);
  CHECK(fr.coeff(2, 2, 2) == 0);
  CHECK(fr.coeff(1, 1, 0) == 1);  // psi x psi = 1
  CHECK(fr.coeff(1, 2, 2) == 1);  // psi x sigma = sigma
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) CHECK(fr.coeff(a, b, c) == ising_verlinde_oracle(a, b, c));
}

TEST_CASE("unit row of every built-in fusion ring") {
  for (const auto& md : builtins_for_tests()) {
    const auto fr = verlinde_fusion(md);
    CHECK(fusion_has_unit(fr));
  }
}

TEST_CASE("SU(2)_2 fusion table is isomorphic to Ising's") {
  const auto a = verlinde_fusion(builtin_su2(2));
  const auto b = verlinde_fusion(builtin_ising());
  // su2_2 labels (0,1,2) with d = (1, sqrt2, 1); the map to (1, sigma, psi)
  const std::size_t map[3] = {0, 2, 1};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        CHECK(a.coeff(i, j, k) == b.coeff(map[i], map[j], map[k]));
}

TEST_CASE("fusion ring axioms hold exactly for the built-ins") {
  for (const auto& md : builtins_for_tests()) {
    const auto fr = verlinde_fusion(md);
    const auto conj = conjugation(md);
    CHECK(fusion_is_commutative(fr));
    CHECK(fusion_has_unit(fr));
    CHECK(fusion_conjugation_ok(fr, conj));
    CHECK(fusion_is_associative(fr));
  }
}

TEST_CASE("Y-matrix") {
  SUBCASE("unit row gives the quantum dimensions") {
    for (const auto& md : builtins_for_tests()) {
      const auto fr = verlinde_fusion(md);
      const auto d = quantum_dims(md);
      const auto y = y_matrix(fr, md.weights, d);
      for (std::size_t i = 0; i < md.rank(); ++i)
        CHECK(std::abs(y(md.vacuum, i) - Complex{d[i], 0.0}) < 1e-9);
    }
  }
  SUBCASE("SU(2)_1 closed form") {
    const auto md = builtin_su2(1);
    const auto y = y_matrix(verlinde_fusion(md), md.weights, quantum_dims(md));
    CHECK(std::abs(y(0, 0) - Complex{1, 0}) < 1e-12);
    CHECK(std::abs(y(0, 1) - Complex{1, 0}) < 1e-12);
    CHECK(std::abs(y(1, 0) - Complex{1, 0}) < 1e-12);
    CHECK(std::abs(y(1, 1) - Complex{-1, 0}) < 1e-12);
  }
  SUBCASE("|a|^{-1} Y reproduces S for every built-in") {
    for (const auto& md : builtins_for_tests()) {
      const auto fr = verlinde_fusion(md);
      const auto d = quantum_dims(md);
      const auto y = y_matrix(fr, md.weights, d);
      double sum_d2 = 0.0;
      for (double x : d) sum_d2 += x * x;
      const double norm = std::sqrt(sum_d2);  // |a| = sqrt(sum d^2) = 2 for Ising
      double worst = 0.0;
      for (std::size_t i = 0; i < md.rank(); ++i)
        for (std::size_t j = 0; j < md.rank(); ++j)
          worst = std::max(worst, std::abs(y(i, j) / norm - md.s(i, j)));
      CHECK(worst < 1e-8);
    }
  }
}

TEST_CASE("Gauss sum invariant c0") {
  // Ising: a = 1 + e^{-i pi} + 2 e^{-2 pi i/16} ... frozen via the direct sum
  {
    Complex a{};
    const double d[3] = {1, 1, std::sqrt(2.0)};
    const double w[3] = {0.0, 0.5, 1.0 / 16.0};
    for (int i = 0; i < 3; ++i)
      a += d[i] * d[i] * std::polar(1.0, -2.0 * std::numbers::pi * w[i]);
    const double oracle = std::fmod(-8.0 * std::arg(a) / (2.0 * std::numbers::pi) + 8.0, 8.0);
    CHECK(oracle == doctest::Approx(0.5).epsilon(1e-12));
  }
  CHECK(gauss_sum_c0(builtin_ising()) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(gauss_sum_c0(builtin_trivial()) == doctest::Approx(0.0));
  // SU(2)_1: a = 1 + e^{-2 pi i/4}, arg = -pi/4, c0 = 1
  CHECK(gauss_sum_c0(builtin_su2(1)) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("a vanishing Gauss sum is a degenerate-data error") {
  // d = (1, 1) with weights (0, 1/2): a = 1 + e^{-i pi} = 0
  auto md = builtin_su2(1);
  md.weights[1] = Rational(1, 2);
  CHECK_THROWS_WITH_AS(gauss_sum_c0(md), doctest::Contains("Gauss sum"), Error);
}

TEST_CASE("c0 matches the central charge mod 4 on the built-ins") {
  for (const auto& md : builtins_for_tests()) {
    const double c0 = gauss_sum_c0(md);
    const double c = md.central_charge.to_double();
    const Complex ph = std::polar(1.0, 2.0 * std::numbers::pi * (c0 - c) / 4.0);
    CHECK(std::abs(ph - Complex{1.0, 0.0}) < 1e-9);
  }
}

TEST_CASE("the eight validation checks pass on every built-in") {
  for (const auto& md : builtins_for_tests()) {
    const auto report = validate(md);
    REQUIRE(report.checks.size() == 8);
    for (const auto& c : report.checks) {
      INFO(md.name, " ", c.name, " residual ", c.residual);
      CHECK(c.pass);
    }
    CHECK(report.worst_residual() < 1e-9);
  }
}

TEST_CASE("validation check names are unique and stable") {
  const auto report = validate(builtin_ising());
  for (std::size_t i = 0; i < report.checks.size(); ++i)
    for (std::size_t j = i + 1; j < report.checks.size(); ++j)
      CHECK(report.checks[i].name != report.checks[j].name);
}

TEST_CASE("a perturbed S-matrix fails unitarity at the right scale") {
  auto md = builtin_ising();
  md.s(0, 0) += 1e-3;
  const auto report = validate(md);
  bool unitarity_failed = false;
  for (const auto& c : report.checks)
    if (c.name == "unitarity") {
      unitarity_failed = !c.pass;
      CHECK(c.residual > 1e-4);
      CHECK(c.residual < 1e-2);
    }
  CHECK(unitarity_failed);
  CHECK_THROWS_AS(require_valid(md), Error);
}

TEST_CASE("validate rejects shape mismatches") {
  auto md = builtin_ising();
  md.weights.pop_back();
  CHECK_THROWS_AS(validate(md), Error);
}

TEST_CASE("verlinde_fusion reports the offending triple on garbage data") {
  auto md = builtin_ising();
  md.s(2, 2) = 0.4;  // still invertible-ish but not modular
  CHECK_THROWS_WITH_AS(verlinde_fusion(md), doctest::Contains("not a non-negative integer"),
                       Error);
}
