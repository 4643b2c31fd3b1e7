// The C^7 domain pair G/Gamma_{E(3;3;1,1,1)}: quotient map, defining
// polynomial, fibers, the three Psi maps, scan-based membership oracles,
// coordinate symmetries, scaling laws, and mu itself.
#pragma once

#include "mudom/linalg.hpp"
#include "mudom/types.hpp"

namespace mudom {

// (a11, a22, m12, a33, m13, m23, det) where mij is the principal minor on {i,j}.
Point7 pi333(const Matrix3& a);

// R_x(z) = det(I - A diag(z)) whenever x = pi333(A):
// 1 - x1 z1 - x2 z2 + x3 z1 z2 - x4 z3 + x5 z1 z3 + x6 z2 z3 - x7 z1 z2 z3.
Complex r_poly(const Point7& x, Complex z1, Complex z2, Complex z3);

enum class FiberKind { X, Y, Z };

// One-variable tetrablock fibers; at = 0 gives (x2,x4,x6), (x1,x4,x5), (x1,x2,x3).
// Throws DomainError(DenominatorVanishes) when the pivot denominator dies.
Point3 fiber(const Point7& x, FiberKind kind, Complex at, double tol = 1e-9);

// Psi^(i)((za, zb), x), i in {1,2,3}; z arguments are the two free polydisc
// variables in increasing index order.
Complex psi_i(int i, Complex za, Complex zb, const Point7& x, double tol = 1e-9);

// True when Psi^(i)(., x) is constantly equal to its pivot coordinate.
bool psi_degenerate(int i, const Point7& x, double tol = 1e-9);

// Base triple gating Psi^(i): (x2,x4,x6), (x1,x4,x5), (x1,x2,x3).
Point3 psi_base(int i, const Point7& x);

struct SupResult {
  double sup = 0.0;
  Complex wa{}, wb{};  // arg-max pair
};

// sup of |Psi^(i)| over the torus pair of radius (ra, rb) (defaults: the unit
// torus). Golden-offset grid + compass refinement. Throws FiberBaseOutside
// when the base triple margin is below -band (denominator zeros invade).
SupResult sup_psi_torus(int i, const Point7& x, const ScanConfig& cfg,
                        double ra = 1.0, double rb = 1.0);

// G oracle (strict containment): base triple in G-tetrablock and sup < 1 on the
// closed bidisc (degenerate branch: |pivot| < 1). Witness: arg-max (za, zb).
Verdict in_G_333(const Point7& x, const ScanConfig& cfg);

// G oracle through one-variable fibers over the closed disc (polar grid).
// Witness: the minimizing disc point.
Verdict in_G_333_fiberwise(const Point7& x, FiberKind kind, const ScanConfig& cfg);

// Gamma oracle (closure): base triple margin >= -band and sup <= 1 over
// shrinking tori rho = 1 - 2^-k, k <= 12. Closed-domain state mapping.
Verdict in_Gamma_333(const Point7& x, const ScanConfig& cfg);

// Independent evidence scan: minimizes |R_x| over tori of radii
// {0.25, 0.5, 0.75, 0.999}; a refined zero is an unconditional Outside
// certificate, otherwise Inside with margin = min |R_x| found.
Verdict r_poly_scan(const Point7& x, const ScanConfig& cfg);

// Coordinate images of the S3 action on (z1, z2, z3).
enum class Perm7 { P12, P13, P23, C1, C2 };
Point7 permute(const Point7& x, Perm7 which);

// Degree-weighted scaling: (r, r, r^2, r, r^2, r^2, r^3) componentwise.
Point7 scale_for_radius(const Point7& x, double r);

// Scales every coordinate except the pivot (1, 2 or 4, 1-based) by r.
// Maps Gamma into Gamma for 0 <= r <= 1.
Point7 starlike_scale(const Point7& x, double r, int pivot);

struct MuResult {
  double mu = 0.0;
  double witness_r = 0.0;  // largest certified member radius; 0 when degenerate
  int iterations = 0;
  bool degenerate = false;  // pi(A) = 0 closed form
};

// mu_E for E = diag(z1, z2, z3): bisection on the largest r with
// scale_for_radius(pi(A), r) still a member; mu = 1/r. Bracket seeded at
// 1/(1 + ||A||), doubled until exit, bisected until width < tol * max(1, mu).
MuResult mu_E333(const Matrix3& a, const ScanConfig& cfg);

}  // namespace mudom
