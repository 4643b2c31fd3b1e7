#include "mudom/domain312.hpp"

#include <algorithm>
#include <cmath>

#include "mudom/linalg.hpp"
#include "scan.hpp"

namespace mudom {

Point5 pi312(const Matrix3& a) {
  require_finite(is_finite(a), "pi312 input");
  Point5 xt;
  xt.x1 = a(0, 0);
  xt.x2 = principal_minor(a, 1, 2) + principal_minor(a, 1, 3);
  xt.x3 = det3(a);
  xt.y1 = a(1, 1) + a(2, 2);
  xt.y2 = principal_minor(a, 2, 3);
  return xt;
}

namespace {

struct Parts {
  Complex num, den;
};

Parts psi3_parts(Complex z, const Point5& xt) {
  const Complex z2 = z * z;
  return {xt.x3 * z2 - xt.x2 * z + xt.x1, xt.y2 * z2 - xt.y1 * z + 1.0};
}

double guarded_ratio(const Parts& p, double tol) {
  const double ad = std::abs(p.den);
  if (ad < tol) {
    if (std::abs(p.num) < tol) return -std::numeric_limits<double>::infinity();
    return 1.0 / tol;
  }
  return std::abs(p.num) / ad;
}

}  // namespace

Complex psi3(Complex z, const Point5& xt, double tol) {
  require_finite(is_finite(z) && is_finite(xt), "psi3 input");
  const Parts p = psi3_parts(z, xt);
  if (std::abs(p.den) < tol)
    throw DomainError(Fault::DenominatorVanishes, "psi3: denominator vanishes");
  return p.num / p.den;
}

bool psi3_degenerate(const Point5& xt, double tol) {
  require_finite(is_finite(xt), "psi3_degenerate input");
  return std::abs(xt.x3 - xt.x1 * xt.y2) < tol && std::abs(xt.x2 - xt.x1 * xt.y1) < tol;
}

double q_root_margin(const Point5& xt) {
  require_finite(is_finite(xt), "q_root_margin input");
  constexpr double kCap = 1e6;
  constexpr double kTiny = 1e-14;
  if (std::abs(xt.y2) < kTiny) {
    if (std::abs(xt.y1) < kTiny) return kCap;  // constant 1, no roots
    return std::min(1.0 / std::abs(xt.y1) - 1.0, kCap);
  }
  // Stable quadratic solve: take the larger-magnitude branch of y1 +/- s,
  // recover the mate through the product of roots 1/y2.
  const Complex s = std::sqrt(xt.y1 * xt.y1 - 4.0 * xt.y2);
  const Complex tp = xt.y1 + s, tm = xt.y1 - s;
  const Complex t = (std::abs(tp) >= std::abs(tm)) ? tp : tm;
  const double m1 = std::abs(t) / (2.0 * std::abs(xt.y2));
  const double m2 = 2.0 / std::abs(t);
  return std::min(std::min(m1, m2) - 1.0, kCap);
}

namespace {

// Shared core of the two oracles: closed-circle sup for G, shrinking circles
// for the closure.
Verdict membership_312(const Point5& xt, const ScanConfig& cfg, bool closure) {
  validate(cfg);
  require_finite(is_finite(xt), "membership_312 input");
  const double qm = q_root_margin(xt);
  if (qm < -cfg.boundary_band)
    return closure ? closed_verdict(qm, {}, cfg) : open_verdict(qm, {}, cfg);
  if (psi3_degenerate(xt, cfg.tol)) {
    const double margin = std::min(qm, 1.0 - std::abs(xt.x1));
    return closure ? closed_verdict(margin, {}, cfg) : open_verdict(margin, {}, cfg);
  }
  auto f = [&](Complex z) { return guarded_ratio(psi3_parts(z, xt), cfg.tol); };
  double sup = 0.0;
  Complex w{};
  if (closure) {
    for (int k = 1; k <= 12; ++k) {
      const double rho = 1.0 - std::ldexp(1.0, -k);
      const detail::Best1 best = detail::circle_max(f, cfg.torus_n, cfg.refine_iters, rho);
      if (best.value > sup) {
        sup = best.value;
        w = best.w;
      }
    }
  } else {
    const detail::Best1 best = detail::circle_max(f, cfg.torus_n, cfg.refine_iters, 1.0);
    sup = best.value;
    w = best.w;
  }
  const double margin = std::min(qm, 1.0 - sup);
  return closure ? closed_verdict(margin, {w}, cfg) : open_verdict(margin, {w}, cfg);
}

}  // namespace

Verdict in_G_312(const Point5& xt, const ScanConfig& cfg) { return membership_312(xt, cfg, false); }

Verdict in_Gamma_312(const Point5& xt, const ScanConfig& cfg) {
  return membership_312(xt, cfg, true);
}

Point2 bidisc_fiber(const Point5& xt, Complex z1, double tol) {
  require_finite(is_finite(xt) && is_finite(z1), "bidisc_fiber input");
  const Complex den = 1.0 - z1 * xt.x1;
  if (std::abs(den) < tol)
    throw DomainError(Fault::DenominatorVanishes, "bidisc_fiber: 1 - z1 x1 vanishes");
  return Point2{(xt.y1 - z1 * xt.x2) / den, (xt.y2 - z1 * xt.x3) / den};
}

Point3 p_fiber(const Point5& xt, Complex z, double tol) {
  require_finite(is_finite(xt) && is_finite(z), "p_fiber input");
  const Complex den = 2.0 - xt.y1 * z;
  if (std::abs(den) < tol)
    throw DomainError(Fault::DenominatorVanishes, "p_fiber: 2 - y1 z vanishes");
  return Point3{(2.0 * xt.x1 - z * xt.x2) / den, (xt.y1 - 2.0 * z * xt.y2) / den,
                (xt.x2 - 2.0 * z * xt.x3) / den};
}

Point5 phi_eta(const Point7& x, Complex eta) {
  require_finite(is_finite(x) && is_finite(eta), "phi_eta input");
  Point5 xt;
  xt.x1 = x[0];
  xt.x2 = x[2] + eta * x[4];
  xt.x3 = eta * x[6];
  xt.y1 = x[1] + eta * x[3];
  xt.y2 = eta * x[5];
  return xt;
}

namespace {

Verdict eta_bridge(const Point7& x, const ScanConfig& cfg, bool closure) {
  validate(cfg);
  require_finite(is_finite(x), "eta_bridge input");
  auto worst = [&](Complex eta) {
    const Point5 xt = phi_eta(x, eta);
    const Verdict v = closure ? in_Gamma_312(xt, cfg) : in_G_312(xt, cfg);
    return -v.margin;  // maximize the negated margin = minimize the margin
  };
  const detail::Best1 best = detail::circle_max(worst, 64, cfg.refine_iters, 1.0);
  const double margin = -best.value;
  return closure ? closed_verdict(margin, {best.w}, cfg) : open_verdict(margin, {best.w}, cfg);
}

}  // namespace

Verdict in_G_via_eta(const Point7& x, const ScanConfig& cfg) { return eta_bridge(x, cfg, false); }

Verdict in_Gamma_via_eta(const Point7& x, const ScanConfig& cfg) {
  return eta_bridge(x, cfg, true);
}

Point5 retract_pair(const Point7& x) {
  require_finite(is_finite(x), "retract_pair input");
  Point5 xt;
  xt.x1 = x[0];
  xt.x2 = x[2] + x[4];
  xt.x3 = x[6];
  xt.y1 = x[1] + x[3];
  xt.y2 = x[5];
  return xt;
}

Point7 embed_pair(const Point5& xt) {
  require_finite(is_finite(xt), "embed_pair input");
  Point7 y;
  y[0] = xt.x1;
  y[1] = xt.y1 / 2.0;
  y[2] = xt.x2 / 2.0;
  y[3] = xt.y1 / 2.0;
  y[4] = xt.x2 / 2.0;
  y[5] = xt.y2;
  y[6] = xt.x3;
  return y;
}

}  // namespace mudom
