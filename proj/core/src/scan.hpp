// Internal grid-scan engine shared by the oracles. Not installed.
//
// Every scan is a golden-offset grid pass followed by serial compass
// refinement from the winning cell, so results are deterministic for a fixed
// config. MUDOM_THREADS > 1 splits the grid's outer loop into contiguous
// chunks whose partial winners are folded in chunk order with a
// (value, flat index) tie-break, which keeps the parallel result identical
// to the serial one.
#pragma once

#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>
#include <vector>

#include "mudom/types.hpp"

namespace mudom::detail {

// Fractional golden-angle offset; keeps grid nodes off the coordinate axes
// and off each other under radius changes.
constexpr double kGolden = 0.38196601125010515;
constexpr double kTau = 6.283185307179586476925286766559005768;

inline Complex unit(double theta) { return Complex(std::cos(theta), std::sin(theta)); }

inline int thread_count() {
  const char* env = std::getenv("MUDOM_THREADS");
  if (!env) return 1;
  int t = std::atoi(env);
  if (t < 1) return 1;
  if (t > 64) return 64;
  return t;
}

struct Best1 {
  double value = 0.0;
  Complex w{};
  long index = 0;
};

struct Best2 {
  double value = 0.0;
  Complex wa{}, wb{};
  long index = 0;
};

struct Best3 {
  double value = 0.0;
  Complex wa{}, wb{}, wc{};
  long index = 0;
};

template <typename Best>
void fold(Best& into, const Best& cand, bool maximize) {
  const bool better = maximize ? (cand.value > into.value) : (cand.value < into.value);
  if (better || (cand.value == into.value && cand.index < into.index)) into = cand;
}

// Splits [0, n) into chunks, runs body(chunk_begin, chunk_end) -> Best on each,
// folds the partials in chunk order.
template <typename Best, typename Body>
Best chunked(int n, bool maximize, Best init, Body&& body) {
  const int threads = thread_count();
  if (threads <= 1 || n < 2 * threads) {
    Best b = init;
    fold(b, body(0, n), maximize);
    return b;
  }
  std::vector<Best> partial(static_cast<size_t>(threads), init);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    const int lo = static_cast<int>(static_cast<long>(n) * t / threads);
    const int hi = static_cast<int>(static_cast<long>(n) * (t + 1) / threads);
    pool.emplace_back([&partial, &body, t, lo, hi] { partial[static_cast<size_t>(t)] = body(lo, hi); });
  }
  for (auto& th : pool) th.join();
  Best b = init;
  for (const auto& p : partial) fold(b, p, maximize);
  return b;
}

// --- torus pair, maximize ---------------------------------------------------

template <typename F>
Best2 torus_max(F&& f, int n, int refine_iters, double ra, double rb) {
  const double lo = -std::numeric_limits<double>::infinity();
  Best2 init{lo, Complex{}, Complex{}, std::numeric_limits<long>::max()};
  auto body = [&](int ia_lo, int ia_hi) {
    Best2 best = init;
    for (int ia = ia_lo; ia < ia_hi; ++ia) {
      const Complex za = ra * unit(kTau * (ia + kGolden) / n);
      for (int ib = 0; ib < n; ++ib) {
        const Complex zb = rb * unit(kTau * (ib + kGolden) / n);
        const double v = f(za, zb);
        fold(best, Best2{v, za, zb, static_cast<long>(ia) * n + ib}, true);
      }
    }
    return best;
  };
  Best2 best = chunked<Best2>(n, true, init, body);

  // Compass refinement over the two angles.
  double ta = std::atan2(best.wa.imag(), best.wa.real());
  double tb = std::atan2(best.wb.imag(), best.wb.real());
  double step = kTau / n;
  for (int it = 0; it < refine_iters; ++it) {
    bool moved = false;
    double bta = ta, btb = tb;
    for (int da = -1; da <= 1; ++da) {
      for (int db = -1; db <= 1; ++db) {
        if (da == 0 && db == 0) continue;
        const double na = ta + da * step, nb = tb + db * step;
        const double v = f(ra * unit(na), rb * unit(nb));
        if (v > best.value) {
          best.value = v;
          bta = na;
          btb = nb;
          moved = true;
        }
      }
    }
    if (moved) {
      ta = bta;
      tb = btb;
    } else {
      step *= 0.5;
    }
  }
  best.wa = ra * unit(ta);
  best.wb = rb * unit(tb);
  if (!std::isfinite(best.value)) best.value = 0.0;  // every sample skipped
  return best;
}

// --- circle, maximize -------------------------------------------------------

template <typename F>
Best1 circle_max(F&& f, int n, int refine_iters, double r) {
  const double lo = -std::numeric_limits<double>::infinity();
  Best1 init{lo, Complex{}, std::numeric_limits<long>::max()};
  auto body = [&](int i_lo, int i_hi) {
    Best1 best = init;
    for (int i = i_lo; i < i_hi; ++i) {
      const Complex z = r * unit(kTau * (i + kGolden) / n);
      fold(best, Best1{f(z), z, static_cast<long>(i)}, true);
    }
    return best;
  };
  Best1 best = chunked<Best1>(n, true, init, body);

  double t = std::atan2(best.w.imag(), best.w.real());
  double step = kTau / n;
  for (int it = 0; it < refine_iters; ++it) {
    const double vm = f(r * unit(t - step));
    const double vp = f(r * unit(t + step));
    if (vm > best.value && vm >= vp) {
      best.value = vm;
      t -= step;
    } else if (vp > best.value) {
      best.value = vp;
      t += step;
    } else {
      step *= 0.5;
    }
  }
  best.w = r * unit(t);
  if (!std::isfinite(best.value)) best.value = 0.0;
  return best;
}

// --- closed disc, polar grid ------------------------------------------------

template <bool Maximize, typename F>
Best1 disc_extremum(F&& f, int nr, int ntheta, int refine_iters, double radius) {
  const double lo = Maximize ? -std::numeric_limits<double>::infinity()
                             : std::numeric_limits<double>::infinity();
  Best1 init{lo, Complex{}, std::numeric_limits<long>::max()};
  auto body = [&](int j_lo, int j_hi) {
    Best1 best = init;
    for (int j = j_lo; j < j_hi; ++j) {
      const double r = radius * j / (nr - 1);
      if (j == 0) {
        fold(best, Best1{f(Complex(0.0, 0.0)), Complex(0.0, 0.0), 0}, Maximize);
        continue;
      }
      for (int k = 0; k < ntheta; ++k) {
        const Complex z = r * unit(kTau * (k + kGolden) / ntheta);
        fold(best, Best1{f(z), z, static_cast<long>(j) * ntheta + k + 1}, Maximize);
      }
    }
    return best;
  };
  Best1 best = chunked<Best1>(nr, Maximize, init, body);

  // Compass refinement in polar coordinates, radius clamped to the disc.
  double r = std::abs(best.w);
  double t = (r > 0.0) ? std::atan2(best.w.imag(), best.w.real()) : 0.0;
  double rstep = radius / (nr - 1);
  double tstep = kTau / ntheta;
  for (int it = 0; it < refine_iters; ++it) {
    bool moved = false;
    double br = r, bt = t;
    for (int dr = -1; dr <= 1; ++dr) {
      for (int dt = -1; dt <= 1; ++dt) {
        if (dr == 0 && dt == 0) continue;
        double nrad = r + dr * rstep;
        if (nrad < 0.0) nrad = 0.0;
        if (nrad > radius) nrad = radius;
        const double nt = t + dt * tstep;
        const double v = f(nrad * unit(nt));
        const bool better = Maximize ? (v > best.value) : (v < best.value);
        if (better) {
          best.value = v;
          br = nrad;
          bt = nt;
          moved = true;
        }
      }
    }
    if (moved) {
      r = br;
      t = bt;
    } else {
      rstep *= 0.5;
      tstep *= 0.5;
    }
  }
  best.w = r * unit(t);
  if (!std::isfinite(best.value)) best.value = 0.0;
  return best;
}

template <typename F>
Best1 disc_min(F&& f, int nr, int ntheta, int refine_iters, double radius) {
  return disc_extremum<false>(f, nr, ntheta, refine_iters, radius);
}

template <typename F>
Best1 disc_max(F&& f, int nr, int ntheta, int refine_iters, double radius) {
  return disc_extremum<true>(f, nr, ntheta, refine_iters, radius);
}

// --- torus triple, minimize -------------------------------------------------

template <typename F>
Best3 torus3_min(F&& f, int n, int refine_iters, double r) {
  const double hi = std::numeric_limits<double>::infinity();
  Best3 init{hi, Complex{}, Complex{}, Complex{}, std::numeric_limits<long>::max()};
  auto body = [&](int ia_lo, int ia_hi) {
    Best3 best = init;
    for (int ia = ia_lo; ia < ia_hi; ++ia) {
      const Complex za = r * unit(kTau * (ia + kGolden) / n);
      for (int ib = 0; ib < n; ++ib) {
        const Complex zb = r * unit(kTau * (ib + kGolden) / n);
        for (int ic = 0; ic < n; ++ic) {
          const Complex zc = r * unit(kTau * (ic + kGolden) / n);
          const double v = f(za, zb, zc);
          fold(best, Best3{v, za, zb, zc, (static_cast<long>(ia) * n + ib) * n + ic}, false);
        }
      }
    }
    return best;
  };
  Best3 best = chunked<Best3>(n, false, init, body);

  double ta = std::atan2(best.wa.imag(), best.wa.real());
  double tb = std::atan2(best.wb.imag(), best.wb.real());
  double tc = std::atan2(best.wc.imag(), best.wc.real());
  double step = kTau / n;
  for (int it = 0; it < refine_iters; ++it) {
    bool moved = false;
    double bta = ta, btb = tb, btc = tc;
    for (int da = -1; da <= 1; ++da)
      for (int db = -1; db <= 1; ++db)
        for (int dc = -1; dc <= 1; ++dc) {
          if (da == 0 && db == 0 && dc == 0) continue;
          const double na = ta + da * step, nb = tb + db * step, nc = tc + dc * step;
          const double v = f(r * unit(na), r * unit(nb), r * unit(nc));
          if (v < best.value) {
            best.value = v;
            bta = na;
            btb = nb;
            btc = nc;
            moved = true;
          }
        }
    if (moved) {
      ta = bta;
      tb = btb;
      tc = btc;
    } else {
      step *= 0.5;
    }
  }
  best.wa = r * unit(ta);
  best.wb = r * unit(tb);
  best.wc = r * unit(tc);
  return best;
}

}  // namespace mudom::detail
