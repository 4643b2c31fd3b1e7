// Closed-form small-matrix algebra: determinants, principal minors, operator
// norms via Cardano on the Gram matrix, and the three permutation conjugations.
#pragma once

#include "mudom/types.hpp"

namespace mudom {

Complex det2(const Matrix2& m);
Complex det3(const Matrix3& m);

// Principal 2x2 minor on rows/columns {i, j}, 1-based, i < j.
// Throws DomainError(InvalidIndexPair) unless (i,j) is (1,2), (1,3) or (2,3).
Complex principal_minor(const Matrix3& m, int i, int j);

Matrix2 mul(const Matrix2& a, const Matrix2& b);
Matrix3 mul(const Matrix3& a, const Matrix3& b);
Matrix2 adjoint(const Matrix2& m);
Matrix3 adjoint(const Matrix3& m);
Matrix3 identity3();
Matrix2 identity2();

// Largest singular value. Relative accuracy ~1e-14 on well-scaled input:
// trigonometric Cardano on A*A followed by Newton polish of the extreme root.
double operator_norm(const Matrix2& m);
double operator_norm(const Matrix3& m);

// Eigenvalues of a Hermitian matrix given by its closed-form characteristic
// cubic; ascending order. Input must be (numerically) Hermitian PSD-ish; used
// for Gram matrices.
std::array<double, 3> hermitian_eigs3(const Matrix3& h);

// Permutation conjugations A -> P A P^T. All three are mu-preserving and act
// on pi333 coordinates as S3 images of the z-variables.
enum class Conjugation {
  J1J1,    // b_ij = a_{4-i,4-j}: reverses both indices
  J1J2,    // rows/cols cycled (3,1,2)
  J1tJ2t,  // rows/cols cycled (2,3,1)
};

Matrix3 conjugate_by(const Matrix3& m, Conjugation which);

}  // namespace mudom
