// Tetrablock (E(2;2;1,1) quotient) and symmetrized-bidisc leaf oracles.
// These are the closed-form base cases every higher-dimensional scan
// bottoms out in.
#pragma once

#include "mudom/types.hpp"

namespace mudom {

// Scalar Moebius form Psi(z, c) = (c1 - z c3) / (1 - c2 z).
// Throws DomainError(DenominatorVanishes) when |1 - c2 z| < tol.
Complex psi(Complex z, const Point3& c, double tol = 1e-9);

// min over both swapped variants of (1 - |c2|^2) - (|c1 - conj(c2) c3| + |c1 c2 - c3|).
// Membership: G iff > 0, Gamma iff >= 0. Exactly swap-symmetric in (c1, c2).
double tetra_margin(const Point3& c);

Verdict in_G_tetra(const Point3& c, const ScanConfig& cfg);

// Symmetric banding on the same margin (margin 0 reports BoundaryBand, matching
// the bidisc closure convention; the big-domain Gamma oracles differ, see types.hpp).
Verdict in_Gamma_tetra(const Point3& c, const ScanConfig& cfg);

// Distinguished-boundary deviation: max(| |c3| - 1 |, |c1 - conj(c2) c3|, (|c2| - 1)+).
double bgamma_deviation(const Point3& c);

// Inside iff deviation <= band, BoundaryBand iff <= 10*band, Outside beyond.
// margin = band - deviation (one-sided; this set has empty interior).
Verdict in_bGamma_tetra(const Point3& c, const ScanConfig& cfg);

// Symmetrized bidisc embeds on the royal slice c1 = c2 = s/2, c3 = p.
Point3 bidisc_embed(const Point2& sp);
Verdict in_G_bidisc(const Point2& sp, const ScanConfig& cfg);
Verdict in_Gamma_bidisc(const Point2& sp, const ScanConfig& cfg);

}  // namespace mudom
