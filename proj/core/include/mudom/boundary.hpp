// Candidate distinguished-boundary sets K (C^7) and K1 (C^5): relation
// checks, unitary images, parametrizations, fiberwise boundary scans, and the
// eta-bridge between the two sets.
#pragma once

#include <cstdint>

#include "mudom/types.hpp"

namespace mudom {

// max deviation over both relation variants
// {x1 - conj(x6) x7, x3 - conj(x4) x7, x5 - conj(x2) x7,
//  x2 - conj(x5) x7, x4 - conj(x3) x7} plus | |x7| - 1 |.
double k_deviation(const Point7& x);

// max of {|x1 - conj(y2) x3|, |x2 - conj(y1) x3|, | |x3| - 1 |}.
double k1_deviation(const Point5& xt);

// Inside iff deviation < band and the Gamma oracle does not say Outside.
// margin = -deviation (or the Gamma margin when that is the blocker).
Verdict in_K(const Point7& x, const ScanConfig& cfg);
Verdict in_K1(const Point5& xt, const ScanConfig& cfg);

// (conj(c6) u, conj(c5) u, conj(c4) u, c4, c5, c6, u).
// Pre: |c_i| <= 1, |u| = 1 (band-tolerant); throws DomainError(DomainViolation).
// The image always satisfies the K relations (k_deviation 0), but lies in K
// only when it also passes the closure oracle: the parameter box maps into,
// not onto, the relation set intersected with the closure. Example outside:
// (c4, c5, c6, u) = (0.3, 1, 0.5, 1) has base triple (1, 0.3, 0.5) beyond the
// tetrablock closure.
Point7 param_K(Complex c4, Complex c5, Complex c6, Complex u, double tol = 1e-9);

// (conj(y2) u, conj(y1) u, u, y1, y2). Pre: |y2| <= 1, |y1| <= 2, |u| = 1.
// Same caveat as param_K: K1 membership still needs the closure check.
Point5 param_K1(Complex y1, Complex y2, Complex u, double tol = 1e-9);

struct UnitaryImageReport {
  int count = 0;
  double worst_k_deviation = 0.0;
  double worst_k1_deviation = 0.0;
  bool all_inside_k = true;
  bool all_inside_k1 = true;
};

// Haar-samples n unitaries and pushes them through pi333 / pi312.
UnitaryImageReport unitary_image_checks(std::uint64_t seed, int n, const ScanConfig& cfg);

struct FiberBoundaryReport {
  // 1: both pivots interior, both fibers scanned on the unit circle;
  // 2: |x4| unimodular, only the z-tilde fiber scanned, over the open disc;
  // 3: |x2| unimodular, only the y-tilde fiber scanned, over the open disc.
  int case_id = 0;
  double worst_deviation = 0.0;
  Complex worst_at{};
  bool consistent_with_k = true;  // deviation small iff in_K not Outside
};

// Scans linear fibers for membership in the tetrablock distinguished
// boundary, following the case split on |x4|, |x2|. With a unimodular pivot
// only that pivot's fiber is decisive; scanning the other fiber over the
// disc would reject genuine members.
FiberBoundaryReport fiber_boundary_check(const Point7& x, const ScanConfig& cfg);

struct BridgeReport {
  Region k_state = Region::Outside;
  Region k1_joint_state = Region::Outside;  // worst K1 verdict over the eta grid
  bool agree = false;
  Complex worst_eta{};
  double worst_deviation = 0.0;
};

// x in K iff Phi_eta(x) in K1 for every unimodular eta; checked on a
// 64-phase golden-offset grid with compass refinement of the worst eta.
BridgeReport k_bridge_check(const Point7& x, const ScanConfig& cfg);

}  // namespace mudom
