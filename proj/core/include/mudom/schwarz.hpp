// Schwarz-lemma necessary conditions: fiberwise sup quantities, the Pick
// positivity test, and membership propagation along analytic-disc samples.
#pragma once

#include <utility>
#include <vector>

#include "mudom/types.hpp"

namespace mudom {

// Six closed-disc sup quantities. G1/G2 run over the x-tilde fiber of z1,
// H1/H2 over the y-tilde fiber of z2, I1/I2 over the z-tilde fiber of z3;
// the odd/even variants swap the roles of the first two fiber slots:
//   sup (|t1 - conj(t2) t3| + |t1 t2 - t3|) / (1 - |t2|^2).
enum class SupKind { G1, G2, H1, H2, I1, I2 };

struct SupQuantity {
  double value = 0.0;
  Complex witness{};  // arg-max disc point
};

// Pre: x strictly inside G (else TargetNotInG): interior fibers keep the
// denominators positive.
SupQuantity sup_quantity(const Point7& x, SupKind kind, const ScanConfig& cfg);

struct SchwarzReport333 {
  Complex lambda0{};
  double g1 = 0, g2 = 0, h1 = 0, h2 = 0, i1 = 0, i2 = 0;
  bool necessary_ok = false;  // max of all six <= |lambda0| + band
  SupKind worst = SupKind::G1;
  Complex worst_witness{};
};

// Necessary conditions for an analytic phi: D -> Gamma with phi(0) = 0,
// phi(lambda0) = x. Pre: 0 < |lambda0| < 1 (Lambda0OutOfRange).
SchwarzReport333 schwarz_necessary_333(Complex lambda0, const Point7& x, const ScanConfig& cfg);

struct SchwarzReport312 {
  Complex lambda0{};
  double gt1 = 0, gt2 = 0;
  bool necessary_ok = false;
  Complex worst_witness{};
};

// Same over the p-fiber of the C^5 domain.
SchwarzReport312 schwarz_necessary_312(Complex lambda0, const Point5& xt, const ScanConfig& cfg);

struct PickResult {
  bool psd = false;
  double min_eig = 0.0;
};

// Pick matrix ((1 - conj(l_i) l_j) / (1 - conj(z_i) z_j)). Pre: nodes in the
// open disc, pairwise distinct (DuplicateNodes). PSD via Jacobi eigenvalues.
PickResult pick_matrix_psd(const std::vector<Complex>& nodes, const std::vector<Complex>& values);

struct PropagationReport {
  bool ok = true;
  int strictly_inside_count = 0;
  std::vector<int> flagged;  // indices that left the closure
};

// Along samples of one analytic disc: if any sample is strictly inside G,
// every sample must be inside Gamma (band-tolerant).
PropagationReport membership_propagation_check(const std::vector<std::pair<double, Point7>>& samples,
                                               const ScanConfig& cfg);
PropagationReport membership_propagation_check_312(
    const std::vector<std::pair<double, Point5>>& samples, const ScanConfig& cfg);

}  // namespace mudom
