#include "mudom/types.hpp"

#include <cmath>

namespace mudom {

Verdict open_verdict(double margin, std::vector<Complex> witness, const ScanConfig& cfg) {
  Verdict v;
  v.margin = margin;
  v.witness = std::move(witness);
  v.config = cfg;
  if (margin > cfg.boundary_band)
    v.state = Region::Inside;
  else if (margin < -cfg.boundary_band)
    v.state = Region::Outside;
  else
    v.state = Region::BoundaryBand;
  return v;
}

Verdict closed_verdict(double margin, std::vector<Complex> witness, const ScanConfig& cfg) {
  Verdict v;
  v.margin = margin;
  v.witness = std::move(witness);
  v.config = cfg;
  if (margin >= -cfg.boundary_band)
    v.state = Region::Inside;
  else if (margin < -10.0 * cfg.boundary_band)
    v.state = Region::Outside;
  else
    v.state = Region::BoundaryBand;
  return v;
}

const char* fault_name(Fault f) {
  switch (f) {
    case Fault::DenominatorVanishes: return "DenominatorVanishes";
    case Fault::SingularResolvent: return "SingularResolvent";
    case Fault::FiberBaseOutside: return "FiberBaseOutside";
    case Fault::TargetNotInG: return "TargetNotInG";
    case Fault::TargetNotOutside: return "TargetNotOutside";
    case Fault::SeparationNotCertified: return "SeparationNotCertified";
    case Fault::Lambda0OutOfRange: return "Lambda0OutOfRange";
    case Fault::DomainViolation: return "DomainViolation";
    case Fault::DuplicateNodes: return "DuplicateNodes";
    case Fault::PathLeavesGamma: return "PathLeavesGamma";
    case Fault::InvalidIndexPair: return "InvalidIndexPair";
    case Fault::NonFiniteInput: return "NonFiniteInput";
  }
  return "Unknown";
}

bool is_finite(double v) { return std::isfinite(v); }
bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }
bool is_finite(const Point2& p) { return is_finite(p.s) && is_finite(p.p); }
bool is_finite(const Point3& p) { return is_finite(p.c1) && is_finite(p.c2) && is_finite(p.c3); }
bool is_finite(const Point5& p) {
  return is_finite(p.x1) && is_finite(p.x2) && is_finite(p.x3) && is_finite(p.y1) && is_finite(p.y2);
}
bool is_finite(const Point7& p) {
  for (const auto& z : p.x)
    if (!is_finite(z)) return false;
  return true;
}
bool is_finite(const Matrix2& m) {
  for (const auto& row : m.a)
    for (const auto& z : row)
      if (!is_finite(z)) return false;
  return true;
}
bool is_finite(const Matrix3& m) {
  for (const auto& row : m.a)
    for (const auto& z : row)
      if (!is_finite(z)) return false;
  return true;
}

void require_finite(bool ok, const char* what) {
  if (!ok) throw DomainError(Fault::NonFiniteInput, std::string("non-finite input: ") + what);
}

void validate(const ScanConfig& cfg) {
  if (cfg.torus_n < 8 || cfg.disc_nr < 2 || cfg.disc_ntheta < 8 || cfg.refine_iters < 0 ||
      !(cfg.tol > 0.0) || cfg.boundary_band < cfg.tol)
    throw DomainError(Fault::DomainViolation, "invalid scan config");
}

}  // namespace mudom
