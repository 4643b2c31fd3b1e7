#include "mudom/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mudom/domain333.hpp"
#include "mudom/linalg.hpp"
#include "mudom/rng.hpp"
#include "mudom/tetrablock.hpp"
#include "scan.hpp"

namespace mudom {

namespace {

constexpr std::uint64_t kContractionSeed = 1000003;
constexpr std::uint64_t kUnitarySeed = 2000003;
constexpr int kMaxNeumannOrder = 20000;

Matrix3 diag3(Complex d1, Complex d2, Complex d3) {
  Matrix3 m;
  m(0, 0) = d1;
  m(1, 1) = d2;
  m(2, 2) = d3;
  return m;
}

// Numerator / denominator of Psi^(2)((z, w), y); f_N is the truncated
// Neumann expansion of exactly this ratio.
struct Psi2Parts {
  Complex num, den;
};

Psi2Parts psi2_parts(const Point7& y, Complex z, Complex w) {
  return {y[1] - y[2] * z - y[5] * w + y[6] * z * w,
          1.0 - y[0] * z - y[3] * w + y[4] * z * w};
}

Matrix2 neumann_step(const Matrix2& m, const Matrix2& s) {
  Matrix2 r;
  r(0, 0) = 1.0 + m(0, 0) * s(0, 0) + m(0, 1) * s(1, 0);
  r(0, 1) = m(0, 0) * s(0, 1) + m(0, 1) * s(1, 1);
  r(1, 0) = m(1, 0) * s(0, 0) + m(1, 1) * s(1, 0);
  r(1, 1) = 1.0 + m(1, 0) * s(0, 1) + m(1, 1) * s(1, 1);
  return r;
}

// Truncated geometric sum 1 + lambda + ... + lambda^n, stable at lambda = 1.
Complex geometric_sum(Complex lambda, int n) {
  if (std::abs(lambda - 1.0) < 1e-6) {
    Complex acc = 1.0, pow = 1.0;
    for (int k = 1; k <= n; ++k) {
      pow *= lambda;
      acc += pow;
    }
    return acc;
  }
  return (std::pow(lambda, n + 1) - 1.0) / (lambda - 1.0);
}

}  // namespace

NonConvexityWitness nonconvexity_witness(const ScanConfig& cfg) {
  validate(cfg);
  const Complex i{0.0, 1.0};
  NonConvexityWitness w;
  w.x = pi333(diag3(1.0, i, 1.0));
  w.y = pi333(diag3(-i, 1.0, -i));
  for (int k = 0; k < 7; ++k) w.midpoint[k] = 0.5 * (w.x[k] + w.y[k]);
  w.vx = in_Gamma_333(w.x, cfg);
  w.vy = in_Gamma_333(w.y, cfg);
  w.vmid = in_Gamma_333(w.midpoint, cfg);
  return w;
}

std::vector<Point7> homotopy_H(const std::vector<std::pair<double, Point7>>& path, double s,
                               const ScanConfig& cfg) {
  validate(cfg);
  require_finite(is_finite(s), "homotopy_H s");
  if (s < 0.0 || s > 1.0)
    throw DomainError(Fault::DomainViolation, "homotopy_H: s must lie in [0, 1]");

  std::vector<Point7> out;
  out.reserve(path.size());
  for (const auto& [t, gamma] : path) {
    require_finite(is_finite(t) && is_finite(gamma), "homotopy_H path sample");
    if (in_Gamma_333(gamma, cfg).state == Region::Outside)
      throw DomainError(Fault::PathLeavesGamma,
                        "homotopy_H: input sample at t = " + std::to_string(t) +
                            " is outside Gamma");
    Point7 h;
    if (s <= 0.5) {
      h[0] = 2.0 * s * gamma[0];
    } else {
      h = starlike_scale(gamma, 2.0 * s - 1.0, 1);
    }
    if (in_Gamma_333(h, cfg).state == Region::Outside)
      throw DomainError(Fault::PathLeavesGamma,
                        "homotopy_H: output at t = " + std::to_string(t) +
                            " leaves Gamma");
    out.push_back(h);
  }
  return out;
}

Complex fn_polynomial(const Point7& y, Complex z0, Complex w0, int n) {
  require_finite(is_finite(y) && is_finite(z0) && is_finite(w0), "fn_polynomial input");
  if (n < 0) throw DomainError(Fault::DomainViolation, "fn_polynomial: order must be >= 0");
  Matrix2 b;
  b(0, 0) = y[0];
  b(0, 1) = y[0] * y[3] - y[4];
  b(1, 0) = 1.0;
  b(1, 1) = y[3];
  Matrix2 m;
  m(0, 0) = b(0, 0) * z0;
  m(0, 1) = b(0, 1) * w0;
  m(1, 0) = b(1, 0) * z0;
  m(1, 1) = b(1, 1) * w0;
  // Horner form of sum_{k<=n} M^k; n = 0 leaves the identity.
  Matrix2 sum;
  sum(0, 0) = 1.0;
  sum(1, 1) = 1.0;
  for (int k = 0; k < n; ++k) sum = neumann_step(m, sum);
  return psi2_parts(y, z0, w0).num * det2(sum);
}

Complex fn_polynomial_eig(const Point7& y, Complex z0, Complex w0, int n) {
  require_finite(is_finite(y) && is_finite(z0) && is_finite(w0), "fn_polynomial_eig input");
  if (n < 0) throw DomainError(Fault::DomainViolation, "fn_polynomial_eig: order must be >= 0");
  // B_y diag(z0, w0) has trace y1 z0 + y4 w0 and determinant y5 z0 w0;
  // det(sum_k M^k) is the product of the per-eigenvalue geometric sums.
  const Complex tr = y[0] * z0 + y[3] * w0;
  const Complex det = y[4] * z0 * w0;
  const Complex disc = std::sqrt(tr * tr - 4.0 * det);
  const Complex tp = tr + disc, tm = tr - disc;
  const Complex big = std::abs(tp) >= std::abs(tm) ? tp : tm;
  Complex l1 = 0.5 * big, l2 = 0.0;
  if (std::abs(l1) > 1e-300) l2 = det / l1;
  return psi2_parts(y, z0, w0).num * geometric_sum(l1, n) * geometric_sum(l2, n);
}

namespace {

struct FnCandidate {
  bool usable = false;
  double q = 0.0;      // torus radius, also the eigenvalue bound on Gamma
  double value = 0.0;  // |Psi^(2)((z0, w0), a)| at the target
  Complex z0{}, w0{};
};

// Spectral radius of B_a diag(z, w) at the target itself. The scan keeps
// only points where this is at most the torus radius: the target lies
// outside Gamma, so Psi^(2)(., a) has poles, and those poles are exactly
// the points where an eigenvalue reaches 1. Restricting to rate <= q keeps
// the denominator above (1-q)^2 and makes the Gamma tail bound apply at the
// target too, so |f_n(a)| >= V - eps is guaranteed, not just sampled.
double target_rate(const Point7& a, Complex z, Complex w) {
  const Complex tr = a[0] * z + a[3] * w;
  const Complex det = a[4] * z * w;
  const Complex disc = std::sqrt(tr * tr - 4.0 * det);
  return 0.5 * std::max(std::abs(tr + disc), std::abs(tr - disc));
}

FnCandidate fn_candidate(const Point7& a, double rho, const ScanConfig& cfg) {
  auto f = [&](Complex za, Complex zb) {
    if (target_rate(a, za, zb) > rho) return -std::numeric_limits<double>::infinity();
    const Psi2Parts p = psi2_parts(a, za, zb);
    if (std::abs(p.den) < cfg.tol) return -std::numeric_limits<double>::infinity();
    return std::abs(p.num / p.den);
  };
  const detail::Best2 best = detail::torus_max(f, cfg.torus_n, cfg.refine_iters, rho, rho);
  FnCandidate c;
  c.q = rho;
  c.z0 = best.wa;
  c.w0 = best.wb;
  const Psi2Parts p = psi2_parts(a, c.z0, c.w0);
  if (std::abs(p.den) < cfg.tol || target_rate(a, c.z0, c.w0) > rho) return c;
  c.value = std::abs(p.num / p.den);
  c.usable = std::isfinite(c.value) && c.value > 1.0;
  return c;
}

// Smallest n with 8 q^(n+1) / (1-q)^2 <= eps. The constant comes from the
// uniform estimate on Gamma: both eigenvalues of B_y diag(z0,w0) satisfy
// |lambda| <= q (the denominator 1 - y1 z - y4 w + y5 z w is zero-free on the
// open bidisc because the base triple of a Gamma point lies in the closed
// tetrablock), each geometric-sum factor is bounded by 1/(1-q) with tail
// q^(n+1)/(1-q), the two-factor product splits into two such terms, and the
// leading linear factor is bounded by (1+q)^2 <= 4.
int neumann_order(double eps, double q) {
  const double rhs = eps * (1.0 - q) * (1.0 - q) / 8.0;
  if (rhs >= 1.0) return 1;
  const int n = static_cast<int>(std::ceil(std::log(rhs) / std::log(q) - 1.0));
  return std::max(1, n);
}

bool fn_certificate(const Point7& a, const ScanConfig& cfg, SeparationCertificate& cert) {
  // Prefer the smallest torus radius whose scan already clears 1 by a safe
  // gap; smaller q keeps the tail bound (and so n) small.
  FnCandidate chosen;
  FnCandidate fallback;
  for (double rho : {0.9, 0.95, 0.99}) {
    const FnCandidate c = fn_candidate(a, rho, cfg);
    if (!c.usable) continue;
    if (c.value > 1.0 + 1e-4) {
      chosen = c;
      break;
    }
    if (c.value > fallback.value) fallback = c;
  }
  if (!chosen.usable) {
    if (fallback.usable && fallback.value > 1.0 + 30.0 * cfg.boundary_band) chosen = fallback;
    else return false;
  }

  const double eps = (chosen.value - 1.0) / 3.0;
  int n = neumann_order(eps, chosen.q);
  if (n > kMaxNeumannOrder) return false;

  double value = 0.0;
  for (;;) {
    value = std::abs(fn_polynomial(a, chosen.z0, chosen.w0, n)) / (1.0 + eps);
    if (value > 1.0 + 10.0 * cfg.boundary_band) break;
    if (n >= kMaxNeumannOrder) return false;
    n = std::min(2 * n, kMaxNeumannOrder);
  }

  // Empirical half of the certificate: the tail bound promises
  // sup_Gamma |f_n| <= 1 + eps, so no sampled Gamma point may beat 1 after
  // normalization.
  double sup = 0.0;
  for (int j = 0; j < 800; ++j) {
    const Point7 y = pi333(random_contraction(kContractionSeed + static_cast<std::uint64_t>(j), 1.0));
    sup = std::max(sup, std::abs(fn_polynomial(y, chosen.z0, chosen.w0, n)));
  }
  for (int j = 0; j < 200; ++j) {
    const Point7 y = pi333(random_unitary(kUnitarySeed + static_cast<std::uint64_t>(j)));
    sup = std::max(sup, std::abs(fn_polynomial(y, chosen.z0, chosen.w0, n)));
  }
  sup /= 1.0 + eps;
  if (sup > 1.0)
    throw DomainError(Fault::SeparationNotCertified,
                      "separate: a sampled Gamma point exceeds the certified bound");

  cert.kind = CertKind::FNPolynomial;
  cert.z0 = chosen.z0;
  cert.w0 = chosen.w0;
  cert.n = n;
  cert.epsilon = eps;
  cert.sup_on_sample = sup;
  cert.value_at_target = value;
  return true;
}

bool tetra_certificate(const Point7& a, const ScanConfig& cfg, SeparationCertificate& cert) {
  const Point3 triples[3] = {{a[0], a[1], a[2]}, {a[0], a[3], a[4]}, {a[1], a[3], a[5]}};
  int best = -1;
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double m = tetra_margin(triples[i]);
    if (m < worst) {
      worst = m;
      best = i;
    }
  }
  if (best < 0 || worst >= -10.0 * cfg.boundary_band) return false;
  cert.kind = CertKind::TetraLift;
  cert.triple = best + 1;
  cert.triple_margin = worst;
  return true;
}

}  // namespace

SeparationCertificate separate(const Point7& a, const ScanConfig& cfg) {
  validate(cfg);
  require_finite(is_finite(a), "separate input");
  if (in_Gamma_333(a, cfg).state != Region::Outside)
    throw DomainError(Fault::TargetNotOutside, "separate: target is not outside Gamma");

  bool in_box = true;
  for (int i = 0; i < 7; ++i)
    if (std::abs(a[i]) > 1.0 + cfg.boundary_band) in_box = false;

  SeparationCertificate cert;
  if (in_box) {
    // Inside the coordinate box the truncated-Neumann polynomial is the
    // construction of record; a negative base triple is only the fallback.
    if (fn_certificate(a, cfg, cert)) return cert;
    if (tetra_certificate(a, cfg, cert)) return cert;
  } else {
    if (tetra_certificate(a, cfg, cert)) return cert;
    if (fn_certificate(a, cfg, cert)) return cert;
  }
  throw DomainError(Fault::SeparationNotCertified, "separate: no certificate route closed");
}

Hyperplane7 hyperplane_lift(const Hyperplane5& l, Complex eta) {
  for (Complex c : l.a) require_finite(is_finite(c), "hyperplane_lift coefficients");
  require_finite(is_finite(l.c) && is_finite(eta), "hyperplane_lift input");
  Hyperplane7 out;
  out.a = {l.a[0], l.a[3], l.a[1], l.a[3] * eta, l.a[1] * eta, l.a[4] * eta, l.a[2] * eta};
  out.c = l.c;
  return out;
}

}  // namespace mudom
