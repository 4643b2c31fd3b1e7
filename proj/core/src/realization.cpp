#include "mudom/realization.hpp"

#include <cmath>

#include "mudom/linalg.hpp"

namespace mudom {

namespace {

Matrix2 lower_block(const Matrix3& a) {
  Matrix2 b;
  b(0, 0) = a(1, 1);
  b(0, 1) = a(1, 2);
  b(1, 0) = a(2, 1);
  b(1, 1) = a(2, 2);
  return b;
}

// I3 - A* A, the defect of a contraction.
Matrix3 defect_gram(const Matrix3& a) {
  Matrix3 d = identity3();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < 3; ++k) s += std::conj(a(k, i)) * a(k, j);
      d(i, j) -= s;
    }
  return d;
}

}  // namespace

Complex mobius_1p2(const Matrix3& a, const Matrix2& x, double tol) {
  require_finite(is_finite(a) && is_finite(x), "mobius_1p2 input");
  const Matrix2 a22 = lower_block(a);
  Matrix2 c = identity2();
  const Matrix2 ax = mul(a22, x);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c(i, j) -= ax(i, j);
  const Complex det = det2(c);
  if (std::abs(det) < tol)
    throw DomainError(Fault::SingularResolvent, "mobius_1p2: I - A22 X singular");
  // inv(c) = adj(c) / det
  Matrix2 inv;
  inv(0, 0) = c(1, 1) / det;
  inv(0, 1) = -c(0, 1) / det;
  inv(1, 0) = -c(1, 0) / det;
  inv(1, 1) = c(0, 0) / det;
  // A12 X inv (a21; a31)
  const Complex r0 = x(0, 0) * (inv(0, 0) * a(1, 0) + inv(0, 1) * a(2, 0)) +
                     x(0, 1) * (inv(1, 0) * a(1, 0) + inv(1, 1) * a(2, 0));
  const Complex r1 = x(1, 0) * (inv(0, 0) * a(1, 0) + inv(0, 1) * a(2, 0)) +
                     x(1, 1) * (inv(1, 0) * a(1, 0) + inv(1, 1) * a(2, 0));
  return a(0, 0) + a(0, 1) * r0 + a(0, 2) * r1;
}

Matrix2 mobius_2p1(const Matrix3& a, Complex z, double tol) {
  require_finite(is_finite(a) && is_finite(z), "mobius_2p1 input");
  const Complex den = 1.0 - a(2, 2) * z;
  if (std::abs(den) < tol)
    throw DomainError(Fault::SingularResolvent, "mobius_2p1: 1 - a33 z vanishes");
  const Complex s = z / den;
  Matrix2 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = a(i, j) + a(i, 2) * s * a(2, j);
  return m;
}

Complex g_of_A(const Matrix3& a, Complex z2, Complex z3, double tol) {
  Matrix2 x;
  x(0, 0) = z2;
  x(1, 1) = z3;
  return mobius_1p2(a, x, tol);
}

Matrix2 f_of_A(const Matrix3& a, Complex z3, double tol) { return mobius_2p1(a, z3, tol); }

Complex cascade(const Matrix3& a, Complex z2, Complex z3, double tol) {
  const Matrix2 b = f_of_A(a, z3, tol);
  const Complex den = 1.0 - b(1, 1) * z2;
  if (std::abs(den) < tol)
    throw DomainError(Fault::SingularResolvent, "cascade: 1 - b22 z2 vanishes");
  return b(0, 0) + b(0, 1) * z2 * b(1, 0) / den;
}

GammaEta2 gamma_eta_2d(const Matrix3& a, Complex z2, Complex z3, double tol) {
  require_finite(is_finite(a) && is_finite(z2) && is_finite(z3), "gamma_eta_2d input");
  // C = I2 - A22 diag(z2, z3); gamma = C^{-1} (a21; a31).
  const Complex det = (1.0 - a(1, 1) * z2) * (1.0 - a(2, 2) * z3) -
                      (a(1, 2) * z3) * (a(2, 1) * z2);
  if (std::abs(det) < tol)
    throw DomainError(Fault::SingularResolvent, "gamma_eta_2d: resolvent singular");
  GammaEta2 ge;
  ge.g1 = ((1.0 - a(2, 2) * z3) * a(1, 0) + a(1, 2) * z3 * a(2, 0)) / det;
  ge.g2 = (a(2, 1) * z2 * a(1, 0) + (1.0 - a(1, 1) * z2) * a(2, 0)) / det;
  ge.eta = {Complex(1.0, 0.0), z2 * ge.g1, z3 * ge.g2};
  return ge;
}

GammaEta1 gamma_eta_1d(const Matrix3& a, Complex z3, double tol) {
  require_finite(is_finite(a) && is_finite(z3), "gamma_eta_1d input");
  const Complex den = 1.0 - a(2, 2) * z3;
  if (std::abs(den) < tol)
    throw DomainError(Fault::SingularResolvent, "gamma_eta_1d: 1 - a33 z3 vanishes");
  GammaEta1 ge;
  ge.g = {a(2, 0) / den, a(2, 1) / den};
  ge.eta[0] = {Complex(1.0, 0.0), Complex(0.0, 0.0)};
  ge.eta[1] = {Complex(0.0, 0.0), Complex(1.0, 0.0)};
  ge.eta[2] = {z3 * ge.g[0], z3 * ge.g[1]};
  return ge;
}

double identity_defect_2d(const Matrix3& a, Complex z2, Complex z3, Complex w2, Complex w3,
                          double tol) {
  const Complex gz = g_of_A(a, z2, z3, tol);
  const Complex gw = g_of_A(a, w2, w3, tol);
  const GammaEta2 ez = gamma_eta_2d(a, z2, z3, tol);
  const GammaEta2 ew = gamma_eta_2d(a, w2, w3, tol);
  const Matrix3 d = defect_gram(a);
  Complex quad = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      quad += std::conj(ew.eta[static_cast<size_t>(i)]) * d(i, j) * ez.eta[static_cast<size_t>(j)];
  const Complex rhs = std::conj(ew.g1) * (1.0 - std::conj(w2) * z2) * ez.g1 +
                      std::conj(ew.g2) * (1.0 - std::conj(w3) * z3) * ez.g2 + quad;
  return std::abs(1.0 - std::conj(gw) * gz - rhs);
}

double identity_defect_1d(const Matrix3& a, Complex z3, Complex w3, double tol) {
  const Matrix2 fz = f_of_A(a, z3, tol);
  const Matrix2 fw = f_of_A(a, w3, tol);
  const GammaEta1 ez = gamma_eta_1d(a, z3, tol);
  const GammaEta1 ew = gamma_eta_1d(a, w3, tol);
  const Matrix3 d = defect_gram(a);

  // lhs = I2 - F(w3)* F(z3)
  Matrix2 lhs = identity2();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < 2; ++k) s += std::conj(fw(k, i)) * fz(k, j);
      lhs(i, j) -= s;
    }

  // rhs = gamma(w3)* (1 - conj(w3) z3) gamma(z3) + eta(w3)* (I3 - A*A) eta(z3)
  Matrix2 rhs;
  const Complex kern = 1.0 - std::conj(w3) * z3;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Complex s = std::conj(ew.g[static_cast<size_t>(i)]) * kern * ez.g[static_cast<size_t>(j)];
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
          s += std::conj(ew.eta[static_cast<size_t>(p)][static_cast<size_t>(i)]) * d(p, q) *
               ez.eta[static_cast<size_t>(q)][static_cast<size_t>(j)];
      rhs(i, j) = s;
    }

  double frob = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) frob += std::norm(lhs(i, j) - rhs(i, j));
  return std::sqrt(frob);
}

}  // namespace mudom
