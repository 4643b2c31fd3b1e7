#include "mudom/schwarz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "mudom/domain312.hpp"
#include "mudom/domain333.hpp"
#include "scan.hpp"

namespace mudom {

namespace {

// (|t1 - conj(t2) t3| + |t1 t2 - t3|) / (1 - |t2|^2), slots swapped for the
// even variants. The G gate keeps the denominator positive; the fallback
// only fires on near-boundary noise and then reports a huge value.
double pair_quantity(Complex t1, Complex t2, Complex t3, double tol) {
  const double den = 1.0 - std::norm(t2);
  const double num = std::abs(t1 - std::conj(t2) * t3) + std::abs(t1 * t2 - t3);
  if (den < tol) return num < tol ? 0.0 : num / tol;
  return num / den;
}

struct KindSpec {
  FiberKind fiber;
  bool swapped;
};

KindSpec kind_spec(SupKind kind) {
  switch (kind) {
    case SupKind::G1: return {FiberKind::X, false};
    case SupKind::G2: return {FiberKind::X, true};
    case SupKind::H1: return {FiberKind::Y, false};
    case SupKind::H2: return {FiberKind::Y, true};
    case SupKind::I1: return {FiberKind::Z, false};
    default: return {FiberKind::Z, true};
  }
}

Complex fiber_pivot(const Point7& x, FiberKind k) {
  switch (k) {
    case FiberKind::X: return x[0];
    case FiberKind::Y: return x[1];
    default: return x[3];
  }
}

SupQuantity sup_unchecked(const Point7& x, SupKind kind, const ScanConfig& cfg) {
  const KindSpec spec = kind_spec(kind);
  const Complex pivot = fiber_pivot(x, spec.fiber);
  auto f = [&](Complex z) {
    if (std::abs(1.0 - pivot * z) < cfg.tol) return -std::numeric_limits<double>::infinity();
    const Point3 t = fiber(x, spec.fiber, z, cfg.tol);
    return spec.swapped ? pair_quantity(t.c2, t.c1, t.c3, cfg.tol)
                        : pair_quantity(t.c1, t.c2, t.c3, cfg.tol);
  };
  const detail::Best1 best =
      detail::disc_max(f, cfg.disc_nr, cfg.disc_ntheta, cfg.refine_iters, 1.0);
  return {best.value, best.w};
}

}  // namespace

SupQuantity sup_quantity(const Point7& x, SupKind kind, const ScanConfig& cfg) {
  validate(cfg);
  require_finite(is_finite(x), "sup_quantity input");
  if (in_G_333(x, cfg).state != Region::Inside)
    throw DomainError(Fault::TargetNotInG, "sup_quantity: point is not strictly inside G");
  return sup_unchecked(x, kind, cfg);
}

SchwarzReport333 schwarz_necessary_333(Complex lambda0, const Point7& x, const ScanConfig& cfg) {
  validate(cfg);
  require_finite(is_finite(lambda0) && is_finite(x), "schwarz_necessary_333 input");
  const double l = std::abs(lambda0);
  if (!(l > 0.0) || l >= 1.0)
    throw DomainError(Fault::Lambda0OutOfRange,
                      "schwarz_necessary_333: lambda0 must satisfy 0 < |lambda0| < 1");
  if (in_G_333(x, cfg).state != Region::Inside)
    throw DomainError(Fault::TargetNotInG, "schwarz_necessary_333: point is not strictly inside G");

  SchwarzReport333 rep;
  rep.lambda0 = lambda0;
  const SupKind kinds[6] = {SupKind::G1, SupKind::G2, SupKind::H1,
                            SupKind::H2, SupKind::I1, SupKind::I2};
  double* slots[6] = {&rep.g1, &rep.g2, &rep.h1, &rep.h2, &rep.i1, &rep.i2};
  double worst = -1.0;
  for (int i = 0; i < 6; ++i) {
    const SupQuantity q = sup_unchecked(x, kinds[i], cfg);
    *slots[i] = q.value;
    if (q.value > worst) {
      worst = q.value;
      rep.worst = kinds[i];
      rep.worst_witness = q.witness;
    }
  }
  rep.necessary_ok = worst <= l + cfg.boundary_band;
  return rep;
}

SchwarzReport312 schwarz_necessary_312(Complex lambda0, const Point5& xt, const ScanConfig& cfg) {
  validate(cfg);
  require_finite(is_finite(lambda0) && is_finite(xt), "schwarz_necessary_312 input");
  const double l = std::abs(lambda0);
  if (!(l > 0.0) || l >= 1.0)
    throw DomainError(Fault::Lambda0OutOfRange,
                      "schwarz_necessary_312: lambda0 must satisfy 0 < |lambda0| < 1");
  if (in_G_312(xt, cfg).state != Region::Inside)
    throw DomainError(Fault::TargetNotInG, "schwarz_necessary_312: point is not strictly inside G");

  SchwarzReport312 rep;
  rep.lambda0 = lambda0;
  for (int variant = 0; variant < 2; ++variant) {
    auto f = [&](Complex z) {
      if (std::abs(2.0 - xt.y1 * z) < cfg.tol) return -std::numeric_limits<double>::infinity();
      const Point3 t = p_fiber(xt, z, cfg.tol);
      return variant ? pair_quantity(t.c2, t.c1, t.c3, cfg.tol)
                     : pair_quantity(t.c1, t.c2, t.c3, cfg.tol);
    };
    const detail::Best1 best =
        detail::disc_max(f, cfg.disc_nr, cfg.disc_ntheta, cfg.refine_iters, 1.0);
    if (variant == 0) {
      rep.gt1 = best.value;
      rep.worst_witness = best.w;
    } else {
      rep.gt2 = best.value;
      if (best.value > rep.gt1) rep.worst_witness = best.w;
    }
  }
  rep.necessary_ok = std::max(rep.gt1, rep.gt2) <= l + cfg.boundary_band;
  return rep;
}

namespace {

// Cyclic Jacobi on a Hermitian matrix held row-major. Each (p, q) step first
// absorbs the pivot's phase into column/row q, then applies the classical
// real rotation; the diagonal stays real throughout.
double jacobi_min_eigenvalue(std::vector<Complex>& a, int n) {
  auto at = [&](int i, int j) -> Complex& { return a[static_cast<size_t>(i) * n + j]; };
  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(at(i, j)));
  if (scale == 0.0) return 0.0;
  const double stop = 1e-15 * scale;

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(at(p, q)));
    if (off <= stop) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double r = std::abs(at(p, q));
        if (r <= stop) continue;
        const Complex phase = at(p, q) / r;
        for (int k = 0; k < n; ++k) at(k, q) *= std::conj(phase);
        for (int k = 0; k < n; ++k) at(q, k) *= phase;

        const double app = at(p, p).real(), aqq = at(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t), s = t * c;
        for (int k = 0; k < n; ++k) {
          const Complex kp = at(k, p), kq = at(k, q);
          at(k, p) = c * kp - s * kq;
          at(k, q) = s * kp + c * kq;
        }
        for (int k = 0; k < n; ++k) {
          const Complex pk = at(p, k), qk = at(q, k);
          at(p, k) = c * pk - s * qk;
          at(q, k) = s * pk + c * qk;
        }
        at(p, q) = at(q, p) = 0.0;
        at(p, p) = Complex(app - t * r, 0.0);
        at(q, q) = Complex(aqq + t * r, 0.0);
      }
    }
  }

  double min_eig = at(0, 0).real();
  for (int i = 1; i < n; ++i) min_eig = std::min(min_eig, at(i, i).real());
  return min_eig;
}

}  // namespace

PickResult pick_matrix_psd(const std::vector<Complex>& nodes, const std::vector<Complex>& values) {
  if (nodes.size() != values.size() || nodes.empty())
    throw DomainError(Fault::DomainViolation, "pick_matrix_psd: need equally many nodes and values");
  const int n = static_cast<int>(nodes.size());
  for (int i = 0; i < n; ++i) {
    require_finite(is_finite(nodes[static_cast<size_t>(i)]) && is_finite(values[static_cast<size_t>(i)]),
                   "pick_matrix_psd input");
    if (std::abs(nodes[static_cast<size_t>(i)]) >= 1.0)
      throw DomainError(Fault::DomainViolation, "pick_matrix_psd: nodes must lie in the open disc");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(nodes[static_cast<size_t>(i)] - nodes[static_cast<size_t>(j)]) < 1e-12)
        throw DomainError(Fault::DuplicateNodes, "pick_matrix_psd: nodes must be pairwise distinct");

  std::vector<Complex> a(static_cast<size_t>(n) * static_cast<size_t>(n));
  double scale = 1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Complex num = 1.0 - std::conj(values[static_cast<size_t>(i)]) * values[static_cast<size_t>(j)];
      const Complex den = 1.0 - std::conj(nodes[static_cast<size_t>(i)]) * nodes[static_cast<size_t>(j)];
      const Complex entry = num / den;
      a[static_cast<size_t>(i) * n + j] = entry;
      scale = std::max(scale, std::abs(entry));
    }
  }
  PickResult res;
  res.min_eig = jacobi_min_eigenvalue(a, n);
  res.psd = res.min_eig >= -1e-12 * scale;
  return res;
}

PropagationReport membership_propagation_check(const std::vector<std::pair<double, Point7>>& samples,
                                               const ScanConfig& cfg) {
  validate(cfg);
  PropagationReport rep;
  for (const auto& [t, x] : samples) {
    require_finite(is_finite(t) && is_finite(x), "membership_propagation_check sample");
    const Verdict g = in_G_333(x, cfg);
    if (g.state == Region::Inside && g.margin > 10.0 * cfg.boundary_band)
      ++rep.strictly_inside_count;
  }
  if (rep.strictly_inside_count > 0) {
    for (size_t i = 0; i < samples.size(); ++i) {
      if (in_Gamma_333(samples[i].second, cfg).state == Region::Outside)
        rep.flagged.push_back(static_cast<int>(i));
    }
  }
  rep.ok = rep.flagged.empty();
  return rep;
}

PropagationReport membership_propagation_check_312(
    const std::vector<std::pair<double, Point5>>& samples, const ScanConfig& cfg) {
  validate(cfg);
  PropagationReport rep;
  for (const auto& [t, xt] : samples) {
    require_finite(is_finite(t) && is_finite(xt), "membership_propagation_check_312 sample");
    const Verdict g = in_G_312(xt, cfg);
    if (g.state == Region::Inside && g.margin > 10.0 * cfg.boundary_band)
      ++rep.strictly_inside_count;
  }
  if (rep.strictly_inside_count > 0) {
    for (size_t i = 0; i < samples.size(); ++i) {
      if (in_Gamma_312(samples[i].second, cfg).state == Region::Outside)
        rep.flagged.push_back(static_cast<int>(i));
    }
  }
  rep.ok = rep.flagged.empty();
  return rep;
}

}  // namespace mudom
