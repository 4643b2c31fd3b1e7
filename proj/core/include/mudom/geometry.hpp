// Geometric facts as checkable certificates: non-convexity, contractibility
// homotopy, polynomial-convexity separation, and hyperplane lifts.
#pragma once

#include <utility>
#include <vector>

#include "mudom/types.hpp"

namespace mudom {

struct NonConvexityWitness {
  Point7 x, y, midpoint;
  Verdict vx, vy, vmid;  // expected: Inside, Inside, Outside
};

// Two Gamma points whose midpoint leaves Gamma. Note: the often-quoted second
// point (-i, 1, -i, -i, -1, i, 1) is itself outside Gamma (its R-polynomial
// vanishes at (0, 1/2, i/3) in the open tridisc); the pair used here is
// pi(diag(1, i, 1)) and pi(diag(-i, 1, -i)).
NonConvexityWitness nonconvexity_witness(const ScanConfig& cfg);

// Contraction H(s, .) of a Gamma loop: s <= 1/2 collapses to the first
// coordinate axis, s >= 1/2 is the pivot-1 starlike scaling by 2s - 1.
// Verifies every input and output stays in Gamma; throws PathLeavesGamma.
std::vector<Point7> homotopy_H(const std::vector<std::pair<double, Point7>>& path, double s,
                               const ScanConfig& cfg);

// f_N(y) = (y2 - z0 y3 - w0 y6 + z0 w0 y7) * det(sum_{k<=N} (B_y D)^k) with
// B_y = [[y1, y1 y4 - y5], [1, y4]], D = diag(z0, w0). Matrix Horner form.
Complex fn_polynomial(const Point7& y, Complex z0, Complex w0, int n);

// Same value through the eigenvalues of B_y D (geometric series per
// eigenvalue); independent evaluation used for cross-checks.
Complex fn_polynomial_eig(const Point7& y, Complex z0, Complex w0, int n);

enum class CertKind { TetraLift, FNPolynomial };

// A polynomial-convexity style separation witness for a target outside Gamma.
// TetraLift: one base triple is outside the tetrablock closure (triple index
// 1..3 and its margin). FNPolynomial: f = f_N/(1 + eps) with
// sup_Gamma |f| <= 1 by the uniform tail bound and |f(target)| > 1.
struct SeparationCertificate {
  CertKind kind = CertKind::TetraLift;
  int triple = 0;
  double triple_margin = 0.0;
  Complex z0{}, w0{};
  int n = 0;
  double epsilon = 0.0;
  double sup_on_sample = 0.0;   // max |f| over sampled Gamma points
  double value_at_target = 0.0; // |f(target)|
};

// Pre: target is Outside Gamma (else TargetNotOutside). Targets inside the
// closed coordinate box try the FN construction first (the construction's own
// hypothesis); outside the box a negative base triple wins. Throws
// SeparationNotCertified when neither route closes.
SeparationCertificate separate(const Point7& a, const ScanConfig& cfg);

struct Hyperplane5 {
  std::array<Complex, 5> a{};
  Complex c{};
};
struct Hyperplane7 {
  std::array<Complex, 7> a{};
  Complex c{};
};

// Pullback of a C^5 hyperplane along Phi_eta:
// (a1, a4, a2, a4 eta, a2 eta, a5 eta, a3 eta), same constant.
Hyperplane7 hyperplane_lift(const Hyperplane5& l, Complex eta);

}  // namespace mudom
