#include "mudom/tetrablock.hpp"

#include <algorithm>
#include <cmath>

namespace mudom {

Complex psi(Complex z, const Point3& c, double tol) {
  require_finite(is_finite(z) && is_finite(c), "psi input");
  const Complex den = 1.0 - c.c2 * z;
  if (std::abs(den) < tol)
    throw DomainError(Fault::DenominatorVanishes, "psi: 1 - c2 z vanishes");
  return (c.c1 - z * c.c3) / den;
}

namespace {
// (1 - |b|^2) - (|a - conj(b) d| + |a b - d|), one swapped variant.
double variant(Complex a, Complex b, Complex d) {
  return (1.0 - std::norm(b)) - (std::abs(a - std::conj(b) * d) + std::abs(a * b - d));
}
}  // namespace

double tetra_margin(const Point3& c) {
  require_finite(is_finite(c), "tetra_margin input");
  return std::min(variant(c.c1, c.c2, c.c3), variant(c.c2, c.c1, c.c3));
}

Verdict in_G_tetra(const Point3& c, const ScanConfig& cfg) {
  validate(cfg);
  return open_verdict(tetra_margin(c), {}, cfg);
}

Verdict in_Gamma_tetra(const Point3& c, const ScanConfig& cfg) {
  validate(cfg);
  // Same margin with the same symmetric banding; a BoundaryBand point here is
  // typically a member (the closure contains its boundary).
  return open_verdict(tetra_margin(c), {}, cfg);
}

double bgamma_deviation(const Point3& c) {
  require_finite(is_finite(c), "bgamma_deviation input");
  const double d1 = std::abs(std::abs(c.c3) - 1.0);
  const double d2 = std::abs(c.c1 - std::conj(c.c2) * c.c3);
  const double d3 = std::max(std::abs(c.c2) - 1.0, 0.0);
  return std::max({d1, d2, d3});
}

Verdict in_bGamma_tetra(const Point3& c, const ScanConfig& cfg) {
  validate(cfg);
  const double dev = bgamma_deviation(c);
  const double band = cfg.boundary_band;
  Verdict v;
  v.margin = band - dev;
  v.config = cfg;
  if (dev <= band)
    v.state = Region::Inside;
  else if (dev <= 10.0 * band)
    v.state = Region::BoundaryBand;
  else
    v.state = Region::Outside;
  return v;
}

Point3 bidisc_embed(const Point2& sp) {
  require_finite(is_finite(sp), "bidisc_embed input");
  return Point3{sp.s / 2.0, sp.s / 2.0, sp.p};
}

Verdict in_G_bidisc(const Point2& sp, const ScanConfig& cfg) {
  return in_G_tetra(bidisc_embed(sp), cfg);
}

Verdict in_Gamma_bidisc(const Point2& sp, const ScanConfig& cfg) {
  return in_Gamma_tetra(bidisc_embed(sp), cfg);
}

}  // namespace mudom
