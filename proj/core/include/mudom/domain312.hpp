// The C^5 domain pair G/Gamma_{E(3;2;1,2)} and its bridges: the eta-family
// linking it to the C^7 pair and the retract/embed maps.
#pragma once

#include "mudom/types.hpp"

namespace mudom {

// (a11, detA12 + detA13, det A, a22 + a33, detA23).
Point5 pi312(const Matrix3& a);

// Psi_3(z, xt) = (x3 z^2 - x2 z + x1) / (y2 z^2 - y1 z + 1).
Complex psi3(Complex z, const Point5& xt, double tol = 1e-9);

// True when the numerator is x1 times the denominator.
bool psi3_degenerate(const Point5& xt, double tol = 1e-9);

// min |root of y2 z^2 - y1 z + 1| - 1, capped at 1e6 when no root exists.
// Positive iff the denominator is zero-free on the closed disc.
double q_root_margin(const Point5& xt);

// G oracle: zero-free denominator on the closed disc and sup |Psi_3| < 1 on the
// unit circle (degenerate branch |x1| < 1). Witness: arg-max z.
Verdict in_G_312(const Point5& xt, const ScanConfig& cfg);

// Gamma oracle: open-disc versions via shrinking circles; closed-domain mapping.
Verdict in_Gamma_312(const Point5& xt, const ScanConfig& cfg);

// Symmetrized-bidisc fiber ((y1 - z1 x2)/(1 - z1 x1), (y2 - z1 x3)/(1 - z1 x1)).
Point2 bidisc_fiber(const Point5& xt, Complex z1, double tol = 1e-9);

// Tetrablock fiber (p1, p2, p3)(z) =
//   ((2 x1 - z x2)/(2 - y1 z), (y1 - 2 z y2)/(2 - y1 z), (x2 - 2 z x3)/(2 - y1 z)).
Point3 p_fiber(const Point5& xt, Complex z, double tol = 1e-9);

// Phi_eta(x) = (x1, x3 + eta x5, eta x7, x2 + eta x4, eta x6); x is in the C^7
// pair iff Phi_eta(x) is in the C^5 pair for every unimodular eta.
Point5 phi_eta(const Point7& x, Complex eta);

// Membership of a C^7 point through the eta-family: min over a 64-phase
// golden-offset grid (plus refinement of the worst eta) of the C^5 oracle
// margin at phi_eta(x, eta). Independent oracle to in_G_333 / in_Gamma_333.
// Witness: the worst eta.
Verdict in_G_via_eta(const Point7& x, const ScanConfig& cfg);
Verdict in_Gamma_via_eta(const Point7& x, const ScanConfig& cfg);

// i2: C^7 -> C^5, (x1, x3 + x5, x7, x2 + x4, x6); satisfies i2(pi333(A)) = pi312(A).
Point5 retract_pair(const Point7& x);

// theta2: C^5 -> C^7 section, (x1, y1/2, x2/2, y1/2, x2/2, y2, x3) in Point5
// field names; i2 o theta2 = id.
Point7 embed_pair(const Point5& xt);

}  // namespace mudom
