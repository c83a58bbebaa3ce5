#include "mtc/orbifold_z2.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "mtc/error.hpp"

namespace mtc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex phase(double turns) { return std::polar(1.0, kTwoPi * turns); }

double eps_sign(std::size_t e) { return e % 2 == 0 ? 1.0 : -1.0; }

}  // namespace

std::string OrbifoldLabelZ2::display(const std::vector<std::string>& base_labels) const {
  std::ostringstream os;
  switch (family) {
    case Family::pair:
      os << "(" << base_labels[a] << "," << base_labels[b] << ")";
      break;
    case Family::diag:
      os << "~(" << base_labels[a] << "," << b << ")";
      break;
    case Family::twist:
      os << "^(" << base_labels[a] << "," << b << ")";
      break;
  }
  return os.str();
}

std::vector<OrbifoldLabelZ2> z2_labels(const ModularData& md) {
  const std::size_t m = md.rank();
  std::vector<OrbifoldLabelZ2> out;
  out.reserve(m * (m - 1) / 2 + 4 * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      out.push_back({OrbifoldLabelZ2::Family::pair, a, b});
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t e = 0; e < 2; ++e) out.push_back({OrbifoldLabelZ2::Family::diag, a, e});
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t e = 0; e < 2; ++e) out.push_back({OrbifoldLabelZ2::Family::twist, a, e});
  return out;
}

std::size_t z2_vacuum_index(const ModularData& md, int eps) {
  const std::size_t m = md.rank();
  return m * (m - 1) / 2 + 2 * md.vacuum + static_cast<std::size_t>(eps);
}

PMatrix p_matrix(const ModularData& md) {
  const std::size_t m = md.rank();
  const double c0 = gauss_sum_c0(md);
  // lifts: Delta in [0,1) exactly as stored, c0 in [0,8)
  std::vector<Complex> t_half(m), t_sq(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double d = md.weights[i].to_double();
    t_half[i] = phase(0.5 * (d - c0 / 24.0));
    t_sq[i] = phase(2.0 * (d - c0 / 24.0));
  }
  const CMatrix th = CMatrix::diagonal(t_half);
  const CMatrix t2 = CMatrix::diagonal(t_sq);
  PMatrix out;
  out.c0 = c0;
  out.p = th * md.s * t2 * md.s * th;
  const double c = md.central_charge.to_double();
  const Complex corr = phase((c - c0) / 8.0);
  out.p_tilde = out.p;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.p_tilde(i, j) = corr * out.p(i, j);
  return out;
}

CMatrix z2_s_matrix(const ModularData& md) {
  const CMatrix& s = md.s;
  const CMatrix pt = p_matrix(md).p_tilde;
  const std::vector<OrbifoldLabelZ2> labels = z2_labels(md);
  const std::size_t n = labels.size();

  using F = OrbifoldLabelZ2::Family;
  CMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const OrbifoldLabelZ2* x = &labels[i];
      const OrbifoldLabelZ2* y = &labels[j];
      if (static_cast<int>(x->family) > static_cast<int>(y->family)) std::swap(x, y);
      Complex v{};
      if (x->family == F::pair && y->family == F::pair) {
        v = s(x->a, y->a) * s(x->b, y->b) + s(x->a, y->b) * s(x->b, y->a);
      } else if (x->family == F::pair && y->family == F::diag) {
        v = s(x->a, y->a) * s(x->b, y->a);
      } else if (x->family == F::pair && y->family == F::twist) {
        v = 0.0;
      } else if (x->family == F::diag && y->family == F::diag) {
        v = 0.5 * s(x->a, y->a) * s(x->a, y->a);
      } else if (x->family == F::diag && y->family == F::twist) {
        // the sign is carried by the untwisted label's epsilon
        v = 0.5 * eps_sign(x->b) * s(x->a, y->a);
      } else {
        v = 0.5 * eps_sign(x->b + y->b) * pt(x->a, y->a);
      }
      out(i, j) = v;
    }
  }
  const double res = out.unitarity_residual();
  if (res >= kEpsModular)
    fail(errc::inconsistency,
         "assembled Z2 orbifold S-matrix is not unitary (residual " + std::to_string(res) + ")");
  return out;
}

std::pair<std::vector<Rational>, Rational> z2_weights(const ModularData& md) {
  const std::vector<OrbifoldLabelZ2> labels = z2_labels(md);
  std::vector<Rational> w;
  w.reserve(labels.size());
  const Rational c16 = md.central_charge / Rational(16);
  using F = OrbifoldLabelZ2::Family;
  for (const OrbifoldLabelZ2& lab : labels) {
    switch (lab.family) {
      case F::pair:
        w.push_back((md.weights[lab.a] + md.weights[lab.b]).mod1());
        break;
      case F::diag:
        // both diagonal summands carry the twist of lambda x lambda
        w.push_back((md.weights[lab.a] + md.weights[lab.a]).mod1());
        break;
      case F::twist:
        w.push_back((md.weights[lab.a] / Rational(2) + c16 +
                     Rational(static_cast<std::int64_t>(lab.b), 2))
                        .mod1());
        break;
    }
  }
  return {std::move(w), md.central_charge * Rational(2)};
}

namespace {

struct ClosedFormContext {
  const ModularData* md;
  const FusionRing* base;            // fusion of the input theory
  const std::vector<std::size_t>* conj;
  const CMatrix* pt;
  std::vector<OrbifoldLabelZ2> labels;

  std::int64_t n(std::size_t a, std::size_t b, std::size_t c) const {
    return base->coeff(a, b, c);
  }
};

// 1/2 sum_d S_{la d} S_{lb d} conj(S_{lc d})^2 / S_{vac d}^2  (+ twisted part)
Complex twist_twist_diag(const ClosedFormContext& ctx, std::size_t la, std::size_t lb,
                         std::size_t lc, double sign) {
  const CMatrix& s = ctx.md->s;
  const std::size_t m = ctx.md->rank();
  const std::size_t vac = ctx.md->vacuum;
  Complex s1{}, s2{};
  for (std::size_t d = 0; d < m; ++d) {
    const Complex cc = std::conj(s(lc, d));
    s1 += s(la, d) * s(lb, d) * cc * cc / (s(vac, d) * s(vac, d));
    s2 += (*ctx.pt)(la, d) * (*ctx.pt)(lb, d) * cc / s(vac, d);
  }
  return 0.5 * s1 + 0.5 * sign * s2;
}

Complex diag_twist_twist(const ClosedFormContext& ctx, std::size_t la, std::size_t lb,
                         std::size_t lc, double sign) {
  const CMatrix& s = ctx.md->s;
  const std::size_t m = ctx.md->rank();
  const std::size_t vac = ctx.md->vacuum;
  Complex s1{}, s2{};
  for (std::size_t d = 0; d < m; ++d) {
    const Complex cc = std::conj(s(lc, d));
    s1 += s(la, d) * s(la, d) * s(lb, d) * cc / (s(vac, d) * s(vac, d));
    s2 += s(la, d) * (*ctx.pt)(lb, d) * std::conj((*ctx.pt)(lc, d)) / s(vac, d);
  }
  return 0.5 * s1 + 0.5 * sign * s2;
}

}  // namespace

FusionRing z2_closed_form_fusion(const ModularData& md) {
  const std::size_t m = md.rank();
  const FusionRing base = verlinde_fusion(md);
  const std::vector<std::size_t> conj = conjugation(md);
  const PMatrix pm = p_matrix(md);

  ClosedFormContext ctx;
  ctx.md = &md;
  ctx.base = &base;
  ctx.conj = &conj;
  ctx.pt = &pm.p_tilde;
  ctx.labels = z2_labels(md);

  const std::size_t n = ctx.labels.size();
  FusionRing fr;
  fr.labels.reserve(n);
  for (const auto& lab : ctx.labels) fr.labels.push_back(lab.display(md.labels));
  fr.vacuum = z2_vacuum_index(md, 0);
  fr.n.assign(n * n * n, 0);

  using F = OrbifoldLabelZ2::Family;
  auto record = [&](std::size_t i, std::size_t j, std::size_t k, Complex v) {
    const std::int64_t r = std::llround(v.real());
    if (std::abs(v - Complex{static_cast<double>(r), 0.0}) > kEpsInteger || r < 0)
      fail(errc::inconsistency, "closed-form fusion coefficient at (" + fr.labels[i] + ", " +
                                    fr.labels[j] + ", " + fr.labels[k] +
                                    ") is not a non-negative integer");
    fr.coeff(i, j, k) = r;
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const OrbifoldLabelZ2* x = &ctx.labels[i];
      const OrbifoldLabelZ2* y = &ctx.labels[j];
      if (static_cast<int>(x->family) > static_cast<int>(y->family)) std::swap(x, y);
      for (std::size_t k = 0; k < n; ++k) {
        const OrbifoldLabelZ2& z = ctx.labels[k];
        std::int64_t v = 0;
        if (x->family == F::pair && y->family == F::pair) {
          const std::size_t l = x->a, mu = x->b, l1 = y->a, mu1 = y->b;
          if (z.family == F::pair) {
            const std::size_t l2 = z.a, mu2 = z.b;
            v = ctx.n(l, l1, l2) * ctx.n(mu, mu1, mu2) + ctx.n(l, l1, mu2) * ctx.n(mu, mu1, l2) +
                ctx.n(l, mu1, l2) * ctx.n(mu, l1, mu2) + ctx.n(l, mu1, mu2) * ctx.n(mu, l1, l2);
          } else if (z.family == F::diag) {
            v = ctx.n(l, l1, z.a) * ctx.n(mu, mu1, z.a) + ctx.n(l, mu1, z.a) * ctx.n(mu, l1, z.a);
          }
        } else if (x->family == F::pair && y->family == F::diag) {
          const std::size_t l = x->a, mu = x->b, l1 = y->a;
          if (z.family == F::pair) {
            v = ctx.n(l, l1, z.a) * ctx.n(mu, l1, z.b) + ctx.n(l, l1, z.b) * ctx.n(mu, l1, z.a);
          } else if (z.family == F::diag) {
            v = ctx.n(l, l1, z.a) * ctx.n(mu, l1, z.a);
          }
        } else if (x->family == F::pair && y->family == F::twist) {
          if (z.family == F::twist) {
            std::int64_t acc = 0;
            for (std::size_t d = 0; d < m; ++d)
              acc += ctx.n(x->a, x->b, d) * ctx.n(d, y->a, z.a);
            v = acc;
          }
        } else if (x->family == F::diag && y->family == F::diag) {
          if (z.family == F::pair) {
            v = ctx.n(x->a, y->a, z.a) * ctx.n(x->a, y->a, z.b);
          } else if (z.family == F::diag) {
            const std::int64_t n0 = ctx.n(x->a, y->a, z.a);
            const double sign = eps_sign(x->b + y->b + z.b);
            record(i, j, k, Complex{0.5 * static_cast<double>(n0) *
                                        (static_cast<double>(n0) + sign),
                                    0.0});
            continue;
          }
        } else if (x->family == F::diag && y->family == F::twist) {
          if (z.family == F::twist) {
            record(i, j, k,
                   diag_twist_twist(ctx, x->a, y->a, z.a, eps_sign(x->b + y->b + z.b)));
            continue;
          }
        } else {  // twist x twist
          if (z.family == F::pair) {
            std::int64_t acc = 0;
            for (std::size_t d = 0; d < m; ++d)
              acc += ctx.n(x->a, y->a, d) * ctx.n(d, conj[z.a], z.b);
            v = acc;
          } else if (z.family == F::diag) {
            record(i, j, k,
                   twist_twist_diag(ctx, x->a, y->a, z.a, eps_sign(x->b + y->b + z.b)));
            continue;
          }
        }
        fr.coeff(i, j, k) = v;
      }
    }
  }
  return fr;
}

ModularData z2_assemble(const ModularData& md) {
  require_valid(md);
  const std::vector<OrbifoldLabelZ2> labels = z2_labels(md);
  ModularData orb;
  orb.name = (md.name.empty() ? std::string("theory") : md.name) + "_z2";
  for (const auto& lab : labels) orb.labels.push_back(lab.display(md.labels));
  orb.vacuum = z2_vacuum_index(md, 0);
  orb.s = z2_s_matrix(md);
  auto [w, c2] = z2_weights(md);
  orb.weights = std::move(w);
  orb.central_charge = c2;

  const ValidationReport report = validate(orb);
  if (!report.all_pass())
    fail(errc::inconsistency, "assembled Z2 orbifold fails validation:\n" + report.summary());

  const FusionRing via_verlinde = verlinde_fusion(orb);
  const FusionRing closed = z2_closed_form_fusion(md);
  if (via_verlinde.n != closed.n)
    fail(errc::inconsistency, "Verlinde fusion of the assembled orbifold disagrees with the "
                              "closed-form rules");

  const double c0 = gauss_sum_c0(md);
  const double c0_orb = gauss_sum_c0(orb);
  const double phase_res = std::abs(phase((c0_orb - 2.0 * c0) / 8.0) - Complex{1.0, 0.0});
  if (phase_res >= kEpsModular)
    fail(errc::inconsistency, "orbifold Gauss sum violates c0' = 2 c0 mod 8");

  const double mu = mu_index(md);
  const double mu_orb = mu_index(orb);
  if (std::abs(mu_orb - 4.0 * mu * mu) / (4.0 * mu * mu) >= kEpsModular)
    fail(errc::inconsistency, "orbifold mu-index is not 4 mu^2");

  return orb;
}

std::vector<int> z2_grading(const ModularData& orb) {
  // locate ~(vac,0) and ~(vac,1): the vacuum and its epsilon partner
  const std::size_t v0 = orb.vacuum;
  const std::size_t v1 = orb.vacuum + 1;
  if (v1 >= orb.rank()) fail(errc::shape_error, "orbifold data too small for grading");
  std::vector<int> out(orb.rank());
  for (std::size_t i = 0; i < orb.rank(); ++i) {
    const Complex ratio = orb.s(v1, i) / orb.s(v0, i);
    if (std::abs(ratio - Complex{1.0, 0.0}) < kEpsModular)
      out[i] = +1;
    else if (std::abs(ratio + Complex{1.0, 0.0}) < kEpsModular)
      out[i] = -1;
    else
      fail(errc::inconsistency, "grading ratio at label " + orb.labels[i] + " is not +-1");
  }
  return out;
}

std::vector<IntegralityRow> integrality_report(const ModularData& md) {
  const std::size_t m = md.rank();
  const std::size_t vac = md.vacuum;
  const CMatrix& s = md.s;
  const CMatrix pt = p_matrix(md).p_tilde;
  std::vector<IntegralityRow> rows;
  rows.reserve(2 * m * m * m);
  for (std::size_t l1 = 0; l1 < m; ++l1) {
    for (std::size_t l2 = 0; l2 < m; ++l2) {
      for (std::size_t l3 = 0; l3 < m; ++l3) {
        Complex s1{}, s2{};
        for (std::size_t d = 0; d < m; ++d) {
          s1 += s(l1, d) * s(l1, d) * s(l2, d) * std::conj(s(l3, d)) / (s(vac, d) * s(vac, d));
          s2 += s(l1, d) * pt(l2, d) * std::conj(pt(l3, d)) / s(vac, d);
        }
        for (int sign : {+1, -1}) {
          IntegralityRow row;
          row.l1 = l1;
          row.l2 = l2;
          row.l3 = l3;
          row.sign = sign;
          const Complex v = 0.5 * s1 + 0.5 * static_cast<double>(sign) * s2;
          row.value = v.real();
          row.rounded = std::llround(v.real());
          row.residual = std::abs(v - Complex{static_cast<double>(row.rounded), 0.0});
          row.integral = row.residual < kEpsInteger;
          row.non_negative = row.rounded >= 0;
          rows.push_back(row);
        }
      }
    }
  }
  return rows;
}

}  // namespace mtc
