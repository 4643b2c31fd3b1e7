// Shared scan configurations and small helpers for the test binaries.
#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mudom/rng.hpp"
#include "mudom/types.hpp"

namespace mudom::testsupport {

// Small grids keep the whole suite fast; compass refinement still brings
// scan margins to ~1e-9 at these sizes.
inline ScanConfig light_config() {
  ScanConfig cfg;
  cfg.torus_n = 96;
  cfg.disc_nr = 12;
  cfg.disc_ntheta = 48;
  cfg.refine_iters = 25;
  return cfg;
}

inline ScanConfig medium_config() {
  ScanConfig cfg;
  cfg.torus_n = 192;
  cfg.disc_nr = 20;
  cfg.disc_ntheta = 96;
  cfg.refine_iters = 30;
  return cfg;
}

inline double dist7(const Point7& a, const Point7& b) {
  double m = 0.0;
  for (int i = 0; i < 7; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double dist5(const Point5& a, const Point5& b) {
  double m = std::abs(a.x1 - b.x1);
  m = std::max(m, std::abs(a.x2 - b.x2));
  m = std::max(m, std::abs(a.x3 - b.x3));
  m = std::max(m, std::abs(a.y1 - b.y1));
  m = std::max(m, std::abs(a.y2 - b.y2));
  return m;
}

inline Point7 constant7(Complex v) {
  Point7 p;
  for (int i = 0; i < 7; ++i) p[i] = v;
  return p;
}

inline Point7 scale7(const Point7& x, Complex c) {
  Point7 p;
  for (int i = 0; i < 7; ++i) p[i] = c * x[i];
  return p;
}

inline Matrix3 scaled(const Matrix3& m, Complex c) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = c * m(i, j);
  return r;
}

inline Matrix3 diag3(Complex d1, Complex d2, Complex d3) {
  Matrix3 m;
  m(0, 0) = d1;
  m(1, 1) = d2;
  m(2, 2) = d3;
  return m;
}

inline Complex unit_sample(SeededRng& rng) {
  const double t = 2.0 * std::numbers::pi * rng.uniform();
  return Complex{std::cos(t), std::sin(t)};
}

// Uniform over the closed unit disc; draws are sequenced for reproducibility.
inline Complex disc_sample(SeededRng& rng) {
  const double r = std::sqrt(rng.uniform());
  return r * unit_sample(rng);
}

inline Point7 random7(SeededRng& rng, double radius) {
  Point7 p;
  for (int i = 0; i < 7; ++i) {
    const Complex c = disc_sample(rng);
    p[i] = radius * c;
  }
  return p;
}

}  // namespace mudom::testsupport
