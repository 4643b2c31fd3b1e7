#include "mudom/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace mudom {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Characteristic cubic of a Hermitian 3x3: l^3 - c2 l^2 + c1 l - c0.
struct Cubic {
  double c2, c1, c0;
};

Cubic char_cubic(const Matrix3& h) {
  const double h11 = h(0, 0).real(), h22 = h(1, 1).real(), h33 = h(2, 2).real();
  const Complex h12 = h(0, 1), h13 = h(0, 2), h23 = h(1, 2);
  Cubic c;
  c.c2 = h11 + h22 + h33;
  c.c1 = h11 * h22 + h11 * h33 + h22 * h33 - std::norm(h12) - std::norm(h13) - std::norm(h23);
  c.c0 = h11 * (h22 * h33 - std::norm(h23)) - std::norm(h12) * h33 -
         std::norm(h13) * h22 + 2.0 * (h12 * h23 * std::conj(h13)).real();
  return c;
}

double eval(const Cubic& c, double l) { return ((l - c.c2) * l + c.c1) * l - c.c0; }
double deval(const Cubic& c, double l) { return (3.0 * l - 2.0 * c.c2) * l + c.c1; }

}  // namespace

Complex det2(const Matrix2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

Complex det3(const Matrix3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Complex principal_minor(const Matrix3& m, int i, int j) {
  if (!((i == 1 && (j == 2 || j == 3)) || (i == 2 && j == 3)))
    throw DomainError(Fault::InvalidIndexPair, "principal_minor wants (1,2), (1,3) or (2,3)");
  const int p = i - 1, q = j - 1;
  return m(p, p) * m(q, q) - m(p, q) * m(q, p);
}

Matrix2 mul(const Matrix2& a, const Matrix2& b) {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

Matrix3 mul(const Matrix3& a, const Matrix3& b) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
  return r;
}

Matrix2 adjoint(const Matrix2& m) {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = std::conj(m(j, i));
  return r;
}

Matrix3 adjoint(const Matrix3& m) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = std::conj(m(j, i));
  return r;
}

Matrix3 identity3() {
  Matrix3 r;
  r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
  return r;
}

Matrix2 identity2() {
  Matrix2 r;
  r(0, 0) = r(1, 1) = 1.0;
  return r;
}

double operator_norm(const Matrix2& m) {
  // Gram eigenvalues in closed form.
  const Matrix2 h = mul(adjoint(m), m);
  const double t = h(0, 0).real() + h(1, 1).real();
  const double d = (h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0)).real();
  const double disc = std::max(0.0, t * t - 4.0 * d);
  const double lmax = 0.5 * (t + std::sqrt(disc));
  return std::sqrt(std::max(0.0, lmax));
}

std::array<double, 3> hermitian_eigs3(const Matrix3& h) {
  const Cubic c = char_cubic(h);
  const double p1 = std::norm(h(0, 1)) + std::norm(h(0, 2)) + std::norm(h(1, 2));
  std::array<double, 3> eig{};
  if (p1 == 0.0) {
    eig = {h(0, 0).real(), h(1, 1).real(), h(2, 2).real()};
    std::sort(eig.begin(), eig.end());
    return eig;
  }
  const double q = c.c2 / 3.0;
  double p2 = 2.0 * p1;
  for (int i = 0; i < 3; ++i) {
    const double d = h(i, i).real() - q;
    p2 += d * d;
  }
  const double p = std::sqrt(p2 / 6.0);
  // r = det((H - qI)/p) / 2, clamped into acos range.
  Matrix3 b;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      b(i, j) = (h(i, j) - (i == j ? Complex(q) : Complex(0))) / p;
  double r = det3(b).real() / 2.0;
  r = std::clamp(r, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  eig[2] = q + 2.0 * p * std::cos(phi);
  eig[0] = q + 2.0 * p * std::cos(phi + 2.0 * kPi / 3.0);
  eig[1] = c.c2 - eig[0] - eig[2];
  // Newton polish; all roots of the characteristic cubic are real.
  for (auto& l : eig) {
    for (int it = 0; it < 3; ++it) {
      const double f = eval(c, l), df = deval(c, l);
      if (df == 0.0) break;
      const double step = f / df;
      l -= step;
      if (std::abs(step) < 1e-18 * std::max(1.0, std::abs(l))) break;
    }
  }
  std::sort(eig.begin(), eig.end());
  return eig;
}

double operator_norm(const Matrix3& m) {
  const Matrix3 h = mul(adjoint(m), m);
  const auto eig = hermitian_eigs3(h);
  return std::sqrt(std::max(0.0, eig[2]));
}

Matrix3 conjugate_by(const Matrix3& m, Conjugation which) {
  // Index maps, 0-based: value (i,j) of the result reads a(sigma(i), sigma(j)).
  static constexpr int rev[3] = {2, 1, 0};
  static constexpr int cyc312[3] = {2, 0, 1};  // result row i copies source row (3,1,2)_i
  static constexpr int cyc231[3] = {1, 2, 0};
  const int* s = nullptr;
  switch (which) {
    case Conjugation::J1J1: s = rev; break;
    case Conjugation::J1J2: s = cyc312; break;
    case Conjugation::J1tJ2t: s = cyc231; break;
  }
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = m(s[i], s[j]);
  return r;
}

}  // namespace mudom
