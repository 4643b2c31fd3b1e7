#include "mudom/domain333.hpp"

#include <algorithm>
#include <cmath>

#include "mudom/tetrablock.hpp"
#include "scan.hpp"

namespace mudom {

Point7 pi333(const Matrix3& a) {
  require_finite(is_finite(a), "pi333 input");
  Point7 x;
  x[0] = a(0, 0);
  x[1] = a(1, 1);
  x[2] = principal_minor(a, 1, 2);
  x[3] = a(2, 2);
  x[4] = principal_minor(a, 1, 3);
  x[5] = principal_minor(a, 2, 3);
  x[6] = det3(a);
  return x;
}

Complex r_poly(const Point7& x, Complex z1, Complex z2, Complex z3) {
  require_finite(is_finite(x) && is_finite(z1) && is_finite(z2) && is_finite(z3),
                 "r_poly input");
  return 1.0 - x[0] * z1 - x[1] * z2 + x[2] * z1 * z2 - x[3] * z3 + x[4] * z1 * z3 +
         x[5] * z2 * z3 - x[6] * z1 * z2 * z3;
}

Point3 fiber(const Point7& x, FiberKind kind, Complex at, double tol) {
  require_finite(is_finite(x) && is_finite(at), "fiber input");
  Complex den, n1, n2, n3;
  switch (kind) {
    case FiberKind::X:
      den = 1.0 - x[0] * at;
      n1 = x[1] - at * x[2];
      n2 = x[3] - at * x[4];
      n3 = x[5] - at * x[6];
      break;
    case FiberKind::Y:
      den = 1.0 - x[1] * at;
      n1 = x[0] - at * x[2];
      n2 = x[3] - at * x[5];
      n3 = x[4] - at * x[6];
      break;
    default:
      den = 1.0 - x[3] * at;
      n1 = x[0] - at * x[4];
      n2 = x[1] - at * x[5];
      n3 = x[2] - at * x[6];
      break;
  }
  if (std::abs(den) < tol)
    throw DomainError(Fault::DenominatorVanishes, "fiber: pivot denominator vanishes");
  return Point3{n1 / den, n2 / den, n3 / den};
}

namespace {

struct Parts {
  Complex num, den;
};

Parts psi_parts(int i, Complex za, Complex zb, const Point7& x) {
  switch (i) {
    case 1:
      return {x[0] - x[2] * za - x[4] * zb + x[6] * za * zb,
              1.0 - x[1] * za - x[3] * zb + x[5] * za * zb};
    case 2:
      return {x[1] - x[2] * za - x[5] * zb + x[6] * za * zb,
              1.0 - x[0] * za - x[3] * zb + x[4] * za * zb};
    case 3:
      return {x[3] - x[4] * za - x[5] * zb + x[6] * za * zb,
              1.0 - x[0] * za - x[1] * zb + x[2] * za * zb};
    default:
      throw DomainError(Fault::DomainViolation, "psi index must be 1, 2 or 3");
  }
}

// |num/den| with the near-pole policy: a joint zero is a removable sample
// (skipped), a lone denominator zero contributes the cap 1/tol.
double guarded_ratio(const Parts& p, double tol) {
  const double ad = std::abs(p.den);
  if (ad < tol) {
    if (std::abs(p.num) < tol) return -std::numeric_limits<double>::infinity();
    return 1.0 / tol;
  }
  return std::abs(p.num) / ad;
}

Complex pivot_of(const Point7& x, FiberKind kind) {
  switch (kind) {
    case FiberKind::X:
      return x[0];
    case FiberKind::Y:
      return x[1];
    default:
      return x[3];
  }
}

}  // namespace

Complex psi_i(int i, Complex za, Complex zb, const Point7& x, double tol) {
  require_finite(is_finite(x) && is_finite(za) && is_finite(zb), "psi_i input");
  const Parts p = psi_parts(i, za, zb, x);
  if (std::abs(p.den) < tol)
    throw DomainError(Fault::DenominatorVanishes, "psi_i: denominator vanishes");
  return p.num / p.den;
}

bool psi_degenerate(int i, const Point7& x, double tol) {
  require_finite(is_finite(x), "psi_degenerate input");
  switch (i) {
    case 1:
      return std::abs(x[2] - x[1] * x[0]) < tol && std::abs(x[4] - x[3] * x[0]) < tol &&
             std::abs(x[6] - x[5] * x[0]) < tol;
    case 2:
      return std::abs(x[2] - x[0] * x[1]) < tol && std::abs(x[5] - x[3] * x[1]) < tol &&
             std::abs(x[6] - x[4] * x[1]) < tol;
    case 3:
      return std::abs(x[4] - x[0] * x[3]) < tol && std::abs(x[5] - x[1] * x[3]) < tol &&
             std::abs(x[6] - x[2] * x[3]) < tol;
    default:
      throw DomainError(Fault::DomainViolation, "psi index must be 1, 2 or 3");
  }
}

Point3 psi_base(int i, const Point7& x) {
  switch (i) {
    case 1:
      return Point3{x[1], x[3], x[5]};
    case 2:
      return Point3{x[0], x[3], x[4]};
    case 3:
      return Point3{x[0], x[1], x[2]};
    default:
      throw DomainError(Fault::DomainViolation, "psi index must be 1, 2 or 3");
  }
}

SupResult sup_psi_torus(int i, const Point7& x, const ScanConfig& cfg, double ra, double rb) {
  validate(cfg);
  require_finite(is_finite(x), "sup_psi_torus input");
  if (tetra_margin(psi_base(i, x)) < -cfg.boundary_band)
    throw DomainError(Fault::FiberBaseOutside, "sup_psi_torus: base triple outside closure");
  auto f = [&](Complex za, Complex zb) {
    return guarded_ratio(psi_parts(i, za, zb, x), cfg.tol);
  };
  const detail::Best2 best = detail::torus_max(f, cfg.torus_n, cfg.refine_iters, ra, rb);
  return SupResult{best.value, best.wa, best.wb};
}

Verdict in_G_333(const Point7& x, const ScanConfig& cfg) {
  validate(cfg);
  require_finite(is_finite(x), "in_G_333 input");
  const double bm = tetra_margin(psi_base(1, x));
  if (bm < -cfg.boundary_band) return open_verdict(bm, {}, cfg);
  if (psi_degenerate(1, x, cfg.tol))
    return open_verdict(std::min(bm, 1.0 - std::abs(x[0])), {}, cfg);
  const SupResult s = sup_psi_torus(1, x, cfg);
  return open_verdict(std::min(bm, 1.0 - s.sup), {s.wa, s.wb}, cfg);
}

Verdict in_G_333_fiberwise(const Point7& x, FiberKind kind, const ScanConfig& cfg) {
  validate(cfg);
  require_finite(is_finite(x), "in_G_333_fiberwise input");
  const double pm = 1.0 - std::abs(pivot_of(x, kind));
  // The pivot denominator 1 - x_pivot z has a closed-disc zero as soon as
  // |x_pivot| >= 1, and that already excludes membership.
  if (pm < cfg.boundary_band) return open_verdict(pm, {}, cfg);
  auto f = [&](Complex z) { return tetra_margin(fiber(x, kind, z, cfg.tol)); };
  const detail::Best1 best =
      detail::disc_min(f, cfg.disc_nr, cfg.disc_ntheta, cfg.refine_iters, 1.0);
  return open_verdict(best.value, {best.w}, cfg);
}

Verdict in_Gamma_333(const Point7& x, const ScanConfig& cfg) {
  validate(cfg);
  require_finite(is_finite(x), "in_Gamma_333 input");
  const double bm = tetra_margin(psi_base(1, x));
  if (bm < -cfg.boundary_band) return closed_verdict(bm, {}, cfg);
  if (psi_degenerate(1, x, cfg.tol))
    return closed_verdict(std::min(bm, 1.0 - std::abs(x[0])), {}, cfg);
  // sup over the open bidisc approached through shrinking tori; the sup is
  // nondecreasing in rho, but every radius is scanned since coarse grids can
  // miss narrow boundary spikes.
  double sup = 0.0;
  Complex wa, wb;
  for (int k = 1; k <= 12; ++k) {
    const double rho = 1.0 - std::ldexp(1.0, -k);
    auto f = [&](Complex za, Complex zb) {
      return guarded_ratio(psi_parts(1, za, zb, x), cfg.tol);
    };
    const detail::Best2 best = detail::torus_max(f, cfg.torus_n, cfg.refine_iters, rho, rho);
    if (best.value > sup) {
      sup = best.value;
      wa = best.wa;
      wb = best.wb;
    }
  }
  return closed_verdict(std::min(bm, 1.0 - sup), {wa, wb}, cfg);
}

Verdict r_poly_scan(const Point7& x, const ScanConfig& cfg) {
  validate(cfg);
  require_finite(is_finite(x), "r_poly_scan input");
  const int n3 = std::max(8, cfg.torus_n / 8);
  double minval = std::numeric_limits<double>::infinity();
  std::vector<Complex> witness;
  for (double r : {0.25, 0.5, 0.75, 0.999}) {
    auto f = [&](Complex za, Complex zb, Complex zc) { return std::abs(r_poly(x, za, zb, zc)); };
    const detail::Best3 best = detail::torus3_min(f, n3, cfg.refine_iters, r);
    if (best.value < minval) {
      minval = best.value;
      witness = {best.wa, best.wb, best.wc};
    }
  }
  Verdict v;
  v.witness = std::move(witness);
  v.config = cfg;
  if (minval < cfg.tol) {
    // A refined interior zero of R_x: unconditional exclusion from the closure.
    v.state = Region::Outside;
    v.margin = minval - cfg.tol;
  } else if (minval < cfg.boundary_band) {
    v.state = Region::BoundaryBand;
    v.margin = minval;
  } else {
    v.state = Region::Inside;
    v.margin = minval;
  }
  return v;
}

Point7 permute(const Point7& x, Perm7 which) {
  require_finite(is_finite(x), "permute input");
  static constexpr int kSrc[5][7] = {
      {1, 0, 2, 3, 5, 4, 6},  // P12
      {3, 1, 5, 0, 4, 2, 6},  // P13
      {0, 3, 4, 1, 2, 5, 6},  // P23
      {1, 3, 5, 0, 2, 4, 6},  // C1
      {3, 0, 4, 1, 5, 2, 6},  // C2
  };
  const int* src = kSrc[static_cast<int>(which)];
  Point7 y;
  for (int i = 0; i < 7; ++i) y[i] = x[src[i]];
  return y;
}

Point7 scale_for_radius(const Point7& x, double r) {
  require_finite(is_finite(x) && is_finite(r), "scale_for_radius input");
  if (r < 0.0) throw DomainError(Fault::DomainViolation, "scale_for_radius: r must be >= 0");
  const double r2 = r * r, r3 = r2 * r;
  Point7 y;
  const double w[7] = {r, r, r2, r, r2, r2, r3};
  for (int i = 0; i < 7; ++i) y[i] = x[i] * w[i];
  return y;
}

Point7 starlike_scale(const Point7& x, double r, int pivot) {
  require_finite(is_finite(x) && is_finite(r), "starlike_scale input");
  if (r < 0.0 || r > 1.0)
    throw DomainError(Fault::DomainViolation, "starlike_scale: r must lie in [0, 1]");
  if (pivot != 1 && pivot != 2 && pivot != 4)
    throw DomainError(Fault::DomainViolation, "starlike_scale: pivot must be 1, 2 or 4");
  Point7 y;
  for (int i = 0; i < 7; ++i) y[i] = (i == pivot - 1) ? x[i] : x[i] * r;
  return y;
}

MuResult mu_E333(const Matrix3& a, const ScanConfig& cfg) {
  validate(cfg);
  require_finite(is_finite(a), "mu_E333 input");
  const Point7 x = pi333(a);
  double biggest = 0.0;
  for (int i = 0; i < 7; ++i) biggest = std::max(biggest, std::abs(x[i]));
  if (biggest < cfg.tol) {
    MuResult m;
    m.degenerate = true;
    return m;
  }

  auto member = [&](double r) { return in_G_333(scale_for_radius(x, r), cfg).margin > 0.0; };

  MuResult m;
  double lo = 1.0 / (1.0 + operator_norm(a));
  // Neumann bound makes lo a member; back off defensively if banding bites.
  for (int guard = 0; guard < 8 && !member(lo); ++guard) lo *= 0.5;
  double hi = lo;
  int doublings = 0;
  do {
    hi *= 2.0;
    ++m.iterations;
    if (++doublings > 64)
      throw DomainError(Fault::DomainViolation, "mu_E333: no exit radius found");
  } while (member(hi));

  while (1.0 / lo - 1.0 / hi >= cfg.tol * std::max(1.0, 1.0 / lo) && m.iterations < 256) {
    const double mid = 0.5 * (lo + hi);
    if (member(mid))
      lo = mid;
    else
      hi = mid;
    ++m.iterations;
  }
  m.mu = 1.0 / lo;
  m.witness_r = lo;
  return m;
}

}  // namespace mudom
