#include "mudom/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mudom/domain312.hpp"
#include "mudom/domain333.hpp"
#include "mudom/linalg.hpp"
#include "mudom/rng.hpp"
#include "mudom/tetrablock.hpp"
#include "scan.hpp"

namespace mudom {

double k_deviation(const Point7& x) {
  require_finite(is_finite(x), "k_deviation");
  const Complex u = x[6];
  double dev = std::abs(std::abs(u) - 1.0);
  dev = std::max(dev, std::abs(x[0] - std::conj(x[5]) * u));
  dev = std::max(dev, std::abs(x[2] - std::conj(x[3]) * u));
  dev = std::max(dev, std::abs(x[4] - std::conj(x[1]) * u));
  dev = std::max(dev, std::abs(x[1] - std::conj(x[4]) * u));
  dev = std::max(dev, std::abs(x[3] - std::conj(x[2]) * u));
  return dev;
}

double k1_deviation(const Point5& xt) {
  require_finite(is_finite(xt), "k1_deviation");
  double dev = std::abs(std::abs(xt.x3) - 1.0);
  dev = std::max(dev, std::abs(xt.x1 - std::conj(xt.y2) * xt.x3));
  dev = std::max(dev, std::abs(xt.x2 - std::conj(xt.y1) * xt.x3));
  return dev;
}

namespace {

// Shared verdict shape for both candidate boundary sets: the relation
// deviation decides the band, the closure oracle can only veto.
Verdict boundary_verdict(double dev, const Verdict& gamma, const ScanConfig& cfg) {
  Verdict v;
  v.config = cfg;
  if (gamma.state == Region::Outside) {
    v.state = Region::Outside;
    v.margin = std::min(gamma.margin, -dev);
    v.witness = gamma.witness;
    return v;
  }
  v.margin = -dev;
  if (dev <= cfg.boundary_band) {
    v.state = Region::Inside;
  } else if (dev <= 10.0 * cfg.boundary_band) {
    v.state = Region::BoundaryBand;
  } else {
    v.state = Region::Outside;
  }
  return v;
}

}  // namespace

Verdict in_K(const Point7& x, const ScanConfig& cfg) {
  validate(cfg);
  return boundary_verdict(k_deviation(x), in_Gamma_333(x, cfg), cfg);
}

Verdict in_K1(const Point5& xt, const ScanConfig& cfg) {
  validate(cfg);
  return boundary_verdict(k1_deviation(xt), in_Gamma_312(xt, cfg), cfg);
}

Point7 param_K(Complex c4, Complex c5, Complex c6, Complex u, double tol) {
  if (!(tol > 0.0)) throw DomainError(Fault::DomainViolation, "param_K: tol must be positive");
  for (Complex c : {c4, c5, c6}) {
    if (!is_finite(c) || std::abs(c) > 1.0 + tol)
      throw DomainError(Fault::DomainViolation, "param_K: coordinate outside the closed disc");
  }
  if (!is_finite(u) || std::abs(std::abs(u) - 1.0) > tol)
    throw DomainError(Fault::DomainViolation, "param_K: u must be unimodular");
  return Point7{std::conj(c6) * u, std::conj(c5) * u, std::conj(c4) * u, c4, c5, c6, u};
}

Point5 param_K1(Complex y1, Complex y2, Complex u, double tol) {
  if (!(tol > 0.0)) throw DomainError(Fault::DomainViolation, "param_K1: tol must be positive");
  if (!is_finite(y2) || std::abs(y2) > 1.0 + tol)
    throw DomainError(Fault::DomainViolation, "param_K1: |y2| must be at most 1");
  if (!is_finite(y1) || std::abs(y1) > 2.0 + tol)
    throw DomainError(Fault::DomainViolation, "param_K1: |y1| must be at most 2");
  if (!is_finite(u) || std::abs(std::abs(u) - 1.0) > tol)
    throw DomainError(Fault::DomainViolation, "param_K1: u must be unimodular");
  return Point5{std::conj(y2) * u, std::conj(y1) * u, u, y1, y2};
}

UnitaryImageReport unitary_image_checks(std::uint64_t seed, int n, const ScanConfig& cfg) {
  validate(cfg);
  if (n <= 0) throw DomainError(Fault::DomainViolation, "unitary_image_checks: n must be positive");
  UnitaryImageReport rep;
  rep.count = n;
  for (int i = 0; i < n; ++i) {
    const Matrix3 u = random_unitary(seed + static_cast<std::uint64_t>(i));
    const Point7 x = pi333(u);
    const Point5 xt = pi312(u);
    rep.worst_k_deviation = std::max(rep.worst_k_deviation, k_deviation(x));
    rep.worst_k1_deviation = std::max(rep.worst_k1_deviation, k1_deviation(xt));
    if (in_K(x, cfg).state != Region::Inside) rep.all_inside_k = false;
    if (in_K1(xt, cfg).state != Region::Inside) rep.all_inside_k1 = false;
  }
  return rep;
}

namespace {

// Worst tetrablock-boundary deviation of one linear fiber along a circle.
// Points where the fiber denominator vanishes are skipped; for honest
// boundary points the fiber stays bounded, so skipping loses nothing.
detail::Best1 fiber_circle_worst(const Point7& x, FiberKind k, Complex pivot,
                                 double radius, const ScanConfig& cfg) {
  auto f = [&](Complex z) {
    if (std::abs(1.0 - pivot * z) < cfg.tol) return -std::numeric_limits<double>::infinity();
    return bgamma_deviation(fiber(x, k, z));
  };
  return detail::circle_max(f, cfg.torus_n, cfg.refine_iters, radius);
}

detail::Best1 fiber_disc_worst(const Point7& x, FiberKind k, Complex pivot,
                               double radius, const ScanConfig& cfg) {
  auto f = [&](Complex z) {
    if (std::abs(1.0 - pivot * z) < cfg.tol) return -std::numeric_limits<double>::infinity();
    return bgamma_deviation(fiber(x, k, z));
  };
  return detail::disc_max(f, cfg.disc_nr, cfg.disc_ntheta, cfg.refine_iters, radius);
}

}  // namespace

FiberBoundaryReport fiber_boundary_check(const Point7& x, const ScanConfig& cfg) {
  validate(cfg);
  require_finite(is_finite(x), "fiber_boundary_check");
  const double band = cfg.boundary_band;
  FiberBoundaryReport rep;

  // With a unimodular pivot only that pivot's fiber characterizes membership,
  // and it does so over the disc; the other fiber may leave the boundary in
  // the interior even for genuine members. With both pivots interior the two
  // fibers are pole-free on the circle and both must stay on the boundary.
  detail::Best1 worst;
  if (std::abs(std::abs(x[3]) - 1.0) <= 10.0 * band) {
    rep.case_id = 2;
    worst = fiber_disc_worst(x, FiberKind::Z, x[3], 1.0 - 1e-3, cfg);
  } else if (std::abs(std::abs(x[1]) - 1.0) <= 10.0 * band) {
    rep.case_id = 3;
    worst = fiber_disc_worst(x, FiberKind::Y, x[1], 1.0 - 1e-3, cfg);
  } else {
    rep.case_id = 1;
    const detail::Best1 bz = fiber_circle_worst(x, FiberKind::Z, x[3], 1.0, cfg);
    const detail::Best1 by = fiber_circle_worst(x, FiberKind::Y, x[1], 1.0, cfg);
    worst = bz.value >= by.value ? bz : by;
  }
  rep.worst_deviation = worst.value;
  rep.worst_at = worst.w;
  const bool fibers_ok = rep.worst_deviation <= 10.0 * band;
  const bool k_ok = in_K(x, cfg).state != Region::Outside;
  rep.consistent_with_k = (fibers_ok == k_ok);
  return rep;
}

BridgeReport k_bridge_check(const Point7& x, const ScanConfig& cfg) {
  validate(cfg);
  require_finite(is_finite(x), "k_bridge_check");
  BridgeReport rep;
  rep.k_state = in_K(x, cfg).state;

  // Joint K1 verdict over a fixed 64-phase grid: one Outside makes the joint
  // state Outside, otherwise one band hit makes it BoundaryBand.
  auto rank = [](Region r) { return r == Region::Outside ? 0 : (r == Region::BoundaryBand ? 1 : 2); };
  int worst_rank = 2;
  constexpr int kPhases = 64;
  for (int k = 0; k < kPhases; ++k) {
    const Complex eta = detail::unit(detail::kTau * (k + detail::kGolden) / kPhases);
    worst_rank = std::min(worst_rank, rank(in_K1(phi_eta(x, eta), cfg).state));
  }
  rep.k1_joint_state = worst_rank == 0   ? Region::Outside
                       : worst_rank == 1 ? Region::BoundaryBand
                                         : Region::Inside;

  // The reported eta maximizes the raw K1 relation deviation.
  auto dev = [&](Complex eta) { return k1_deviation(phi_eta(x, eta)); };
  const detail::Best1 worst = detail::circle_max(dev, kPhases, cfg.refine_iters, 1.0);
  rep.worst_eta = worst.w;
  rep.worst_deviation = worst.value;

  // Disagreement means a hard contradiction; band states are inconclusive.
  const bool k_in = rep.k_state == Region::Inside;
  const bool k_out = rep.k_state == Region::Outside;
  const bool j_in = rep.k1_joint_state == Region::Inside;
  const bool j_out = rep.k1_joint_state == Region::Outside;
  rep.agree = !((k_in && j_out) || (k_out && j_in));
  return rep;
}

}  // namespace mudom
