// Linear-fractional realizations M_A(X) = A11 + A12 X (I - A22 X)^{-1} A21 on
// the two block splits of a 3x3 matrix, their gamma/eta columns, and the
// one- and two-variable unitary-realization identities.
#pragma once

#include "mudom/types.hpp"

namespace mudom {

// 1+2 split: A11 scalar, A22 the lower 2x2 block, X a 2x2 load. Scalar result.
// Throws DomainError(SingularResolvent) when |det(I - A22 X)| < tol.
Complex mobius_1p2(const Matrix3& a, const Matrix2& x, double tol = 1e-9);

// 2+1 split: A11 the upper 2x2 block, X = z scalar. 2x2 result.
Matrix2 mobius_2p1(const Matrix3& a, Complex z, double tol = 1e-9);

// G_A(z2, z3) = M_A(diag(z2, z3)) on the 1+2 split.
Complex g_of_A(const Matrix3& a, Complex z2, Complex z3, double tol = 1e-9);

// F_A(z3) = M_A(z3) on the 2+1 split.
Matrix2 f_of_A(const Matrix3& a, Complex z3, double tol = 1e-9);

// Cascade G_{F_A(z3)}(z2); equals g_of_A and Psi^(1) at pi333(A).
Complex cascade(const Matrix3& a, Complex z2, Complex z3, double tol = 1e-9);

// Columns of the 1+2 realization:
// gamma = (I - A22 diag(z2,z3))^{-1} (a21; a31), eta = (1; z2 g1; z3 g2).
struct GammaEta2 {
  Complex g1{}, g2{};
  std::array<Complex, 3> eta{};
};
GammaEta2 gamma_eta_2d(const Matrix3& a, Complex z2, Complex z3, double tol = 1e-9);

// Row gamma(z3) = (1 - a33 z3)^{-1} (a31 a32) and the 3x2 column map
// eta(z3) = [I2; z3 gamma(z3)] of the 2+1 realization.
struct GammaEta1 {
  std::array<Complex, 2> g{};
  std::array<std::array<Complex, 2>, 3> eta{};
};
GammaEta1 gamma_eta_1d(const Matrix3& a, Complex z3, double tol = 1e-9);

// |1 - conj(G_A(w)) G_A(z) - [gamma/eta bilinear form]|; zero in exact arithmetic.
double identity_defect_2d(const Matrix3& a, Complex z2, Complex z3, Complex w2, Complex w3,
                          double tol = 1e-9);

// Frobenius norm of I2 - F_A(w3)* F_A(z3) - [gamma/eta bilinear form].
double identity_defect_1d(const Matrix3& a, Complex z3, Complex w3, double tol = 1e-9);

}  // namespace mudom
