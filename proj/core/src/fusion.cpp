#include "mtc/fusion.hpp"

#include <cmath>
#include <numbers>

#include "mtc/error.hpp"

namespace mtc {

FusionRing verlinde_fusion(const ModularData& md) {
  const std::size_t m = md.rank();
  const CMatrix& s = md.s;
  FusionRing fr;
  fr.labels = md.labels;
  fr.vacuum = md.vacuum;
  fr.n.assign(m * m * m, 0);

  std::vector<Complex> row(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t d = 0; d < m; ++d) row[d] = s(a, d) * s(b, d) / s(md.vacuum, d);
      for (std::size_t c = 0; c < m; ++c) {
        Complex v{};
        for (std::size_t d = 0; d < m; ++d) v += row[d] * std::conj(s(c, d));
        const std::int64_t r = std::llround(v.real());
        if (std::abs(v - Complex{static_cast<double>(r), 0.0}) > kEpsInteger || r < 0)
          fail(errc::not_modular, "Verlinde coefficient at (" + md.labels[a] + ", " +
                                      md.labels[b] + ", " + md.labels[c] +
                                      ") is not a non-negative integer");
        fr.coeff(a, b, c) = r;
      }
    }
  }
  return fr;
}

bool fusion_is_commutative(const FusionRing& fr) {
  const std::size_t m = fr.rank();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        if (fr.coeff(a, b, c) != fr.coeff(b, a, c)) return false;
  return true;
}

bool fusion_has_unit(const FusionRing& fr) {
  const std::size_t m = fr.rank();
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t c = 0; c < m; ++c)
      if (fr.coeff(fr.vacuum, b, c) != (b == c ? 1 : 0)) return false;
  return true;
}

bool fusion_conjugation_ok(const FusionRing& fr, const std::vector<std::size_t>& conj) {
  const std::size_t m = fr.rank();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (fr.coeff(a, b, fr.vacuum) != (conj[a] == b ? 1 : 0)) return false;
  return true;
}

bool fusion_is_associative(const FusionRing& fr) {
  const std::size_t m = fr.rank();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t e = 0; e < m; ++e) {
          std::int64_t lhs = 0;
          std::int64_t rhs = 0;
          for (std::size_t d = 0; d < m; ++d) {
            lhs += fr.coeff(a, b, d) * fr.coeff(d, c, e);
            rhs += fr.coeff(b, c, d) * fr.coeff(a, d, e);
          }
          if (lhs != rhs) return false;
        }
      }
    }
  }
  return true;
}

CMatrix y_matrix(const FusionRing& fr, const std::vector<Rational>& weights,
                 const std::vector<double>& dims) {
  const std::size_t m = fr.rank();
  if (weights.size() != m || dims.size() != m)
    fail(errc::shape_error, "y_matrix inputs have inconsistent label sets");
  std::vector<Complex> omega(m);
  for (std::size_t i = 0; i < m; ++i)
    omega[i] = std::polar(1.0, 2.0 * std::numbers::pi * weights[i].to_double());
  CMatrix y(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      Complex v{};
      for (std::size_t c = 0; c < m; ++c) {
        const std::int64_t n = fr.coeff(a, b, c);
        if (n != 0)
          v += static_cast<double>(n) * omega[a] * omega[b] / omega[c] * dims[c];
      }
      y(a, b) = v;
    }
  }
  return y;
}

}  // namespace mtc
