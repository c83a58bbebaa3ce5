#include "mtc/modular_data.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "mtc/error.hpp"
#include "mtc/fusion.hpp"

namespace mtc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex phase(const Rational& q) { return std::polar(1.0, kTwoPi * q.to_double()); }

void check_shape(const ModularData& md) {
  const std::size_t m = md.rank();
  if (m == 0) fail(errc::shape_error, "theory has no labels");
  if (md.s.size() != m) fail(errc::shape_error, "S-matrix size does not match label count");
  if (md.weights.size() != m) fail(errc::shape_error, "weights length does not match label count");
  if (md.vacuum >= m) fail(errc::shape_error, "vacuum index out of range");
}

}  // namespace

bool ValidationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

double ValidationReport::worst_residual() const {
  double worst = 0.0;
  for (const auto& c : checks) worst = std::max(worst, c.residual);
  return worst;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks)
    os << c.name << ": " << (c.pass ? "pass" : "FAIL") << " (residual " << c.residual << ")\n";
  return os.str();
}

std::vector<double> quantum_dims(const ModularData& md) {
  check_shape(md);
  const std::size_t m = md.rank();
  const Complex svv = md.s(md.vacuum, md.vacuum);
  for (std::size_t i = 0; i < m; ++i) {
    const Complex e = md.s(md.vacuum, i);
    if (e.real() <= 0.0 || std::abs(e.imag()) > kEpsModular)
      fail(errc::data_invalid, "vacuum row of S is not strictly positive real at label " +
                                   md.labels[i]);
  }
  std::vector<double> d(m);
  for (std::size_t i = 0; i < m; ++i) d[i] = (md.s(i, md.vacuum) / svv).real();
  return d;
}

double mu_index(const ModularData& md) {
  check_shape(md);
  const double svv = std::abs(md.s(md.vacuum, md.vacuum));
  return 1.0 / (svv * svv);
}

std::vector<std::size_t> conjugation(const ModularData& md) {
  check_shape(md);
  const std::size_t m = md.rank();
  const CMatrix s2 = md.s * md.s;
  std::vector<std::size_t> pi(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double dist_to_one = std::abs(s2(i, j) - Complex{1.0, 0.0});
      if (dist_to_one < 0.5) {
        if (pi[i] != m || dist_to_one >= kEpsModular)
          fail(errc::data_invalid, "S^2 is not a permutation matrix");
        pi[i] = j;
      } else if (std::abs(s2(i, j)) >= kEpsModular) {
        fail(errc::data_invalid, "S^2 is not a permutation matrix");
      }
    }
    if (pi[i] == m) fail(errc::data_invalid, "S^2 is not a permutation matrix");
  }
  for (std::size_t i = 0; i < m; ++i)
    if (pi[pi[i]] != i) fail(errc::data_invalid, "conjugation is not an involution");
  if (pi[md.vacuum] != md.vacuum) fail(errc::data_invalid, "vacuum is not self-conjugate");
  return pi;
}

double gauss_sum_c0(const ModularData& md) {
  const std::vector<double> d = quantum_dims(md);
  Complex a{};
  for (std::size_t i = 0; i < md.rank(); ++i)
    a += d[i] * d[i] * std::conj(phase(md.weights[i]));
  if (std::abs(a) < kEpsModular) fail(errc::degenerate_gauss_sum, "Gauss sum vanishes");
  double c0 = std::fmod(-8.0 * std::arg(a) / kTwoPi, 8.0);
  if (c0 < 0.0) c0 += 8.0;
  return c0;
}

CMatrix t_matrix(const ModularData& md) {
  check_shape(md);
  const double c0 = gauss_sum_c0(md);
  const Complex front = std::polar(1.0, -kTwoPi * c0 / 24.0);
  std::vector<Complex> diag(md.rank());
  for (std::size_t i = 0; i < md.rank(); ++i) diag[i] = front * phase(md.weights[i]);
  return CMatrix::diagonal(diag);
}

ValidationReport validate(const ModularData& md) {
  check_shape(md);
  const std::size_t m = md.rank();
  ValidationReport report;
  auto add = [&](const std::string& name, double residual, double eps) {
    report.checks.push_back({name, residual < eps, residual});
  };

  add("symmetry", md.s.symmetry_residual(), kEpsModular);
  add("unitarity", md.s.unitarity_residual(), kEpsModular);

  double vac_res = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const Complex e = md.s(md.vacuum, i);
    vac_res = std::max(vac_res, std::abs(e.imag()));
    if (e.real() <= 0.0) vac_res = std::max(vac_res, 1.0);
  }
  add("vacuum-row-positivity", vac_res, kEpsModular);

  // S^2 against the nearest 0/1 matrix, plus involution/vacuum structure.
  const CMatrix s2 = md.s * md.s;
  double conj_res = 0.0;
  std::vector<std::size_t> pi(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t best = 0;
    double best_abs = -1.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double a = std::abs(s2(i, j));
      if (a > best_abs) {
        best_abs = a;
        best = j;
      }
    }
    pi[i] = best;
    for (std::size_t j = 0; j < m; ++j) {
      const Complex target = (j == best) ? Complex{1.0, 0.0} : Complex{};
      conj_res = std::max(conj_res, std::abs(s2(i, j) - target));
    }
  }
  bool structure_ok = pi[md.vacuum] == md.vacuum;
  for (std::size_t i = 0; i < m; ++i) structure_ok = structure_ok && pi[pi[i]] == i;
  if (!structure_ok) conj_res = std::max(conj_res, 1.0);
  add("S2-is-conjugation", conj_res, kEpsModular);

  double sts_res = 1.0;
  double tc_res = 1.0;
  double gauss_res = 1.0;
  bool gauss_ok = true;
  try {
    const CMatrix t = t_matrix(md);
    const CMatrix lhs = md.s * t * md.s;
    std::vector<Complex> tinv_d(m);
    for (std::size_t i = 0; i < m; ++i) tinv_d[i] = 1.0 / t(i, i);
    const CMatrix tinv = CMatrix::diagonal(tinv_d);
    sts_res = lhs.max_abs_diff(tinv * md.s * tinv);

    // T commutes with conjugation: omega_{conj(i)} = omega_i.
    tc_res = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      tc_res = std::max(tc_res, std::abs(t(i, i) - t(pi[i], pi[i])));
  } catch (const Error&) {
    gauss_ok = false;
  }
  add("STS-relation", sts_res, kEpsModular);
  add("T-conjugation-commute", tc_res, kEpsModular);

  double verlinde_res = 0.0;
  try {
    const CMatrix& s = md.s;
    for (std::size_t a = 0; a < m && verlinde_res < 1.0; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        for (std::size_t c = 0; c < m; ++c) {
          Complex v{};
          for (std::size_t d = 0; d < m; ++d)
            v += s(a, d) * s(b, d) * std::conj(s(c, d)) / s(md.vacuum, d);
          const double r = std::llround(v.real());
          verlinde_res = std::max(verlinde_res, std::abs(v - Complex{r, 0.0}));
          if (r < 0) verlinde_res = std::max(verlinde_res, 1.0);
        }
      }
    }
  } catch (const Error&) {
    verlinde_res = 1.0;
  }
  add("Verlinde-integrality", verlinde_res, kEpsInteger);

  if (gauss_ok) {
    try {
      const std::vector<double> d = quantum_dims(md);
      Complex a{};
      double sum_d2 = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        a += d[i] * d[i] * std::conj(phase(md.weights[i]));
        sum_d2 += d[i] * d[i];
      }
      gauss_res = std::abs(std::abs(a) * std::abs(a) - sum_d2) / sum_d2;
    } catch (const Error&) {
      gauss_res = 1.0;
    }
  }
  add("Gauss-sum-modulus", gauss_res, kEpsModular);

  return report;
}

void require_valid(const ModularData& md) {
  const ValidationReport report = validate(md);
  if (!report.all_pass())
    fail(errc::data_invalid, "modular data fails validation:\n" + report.summary());
}

}  // namespace mtc
