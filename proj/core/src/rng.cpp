#include "mudom/rng.hpp"

#include <cmath>

#include "mudom/linalg.hpp"

namespace mudom {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559005768;
}

double SeededRng::uniform() {
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double SeededRng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller; u1 shifted into (0, 1] to keep the log finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(kTwoPi * u2);
  has_spare_ = true;
  return r * std::cos(kTwoPi * u2);
}

Complex SeededRng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) / std::sqrt(2.0);
}

Matrix3 ginibre(SeededRng& rng) {
  Matrix3 g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      g(i, j) = rng.complex_normal();
  return g;
}

Matrix3 random_contraction(std::uint64_t seed, double norm_bound) {
  if (!(norm_bound > 0.0) || norm_bound > 1.0)
    throw DomainError(Fault::DomainViolation, "norm_bound must lie in (0, 1]");
  SeededRng rng(seed);
  const Matrix3 g = ginibre(rng);
  double u = 0.5 * rng.uniform();
  if (u < 1e-12) u = 1e-12;  // keep the bound strict
  const double s = operator_norm(g);
  Matrix3 r;
  if (s == 0.0) return r;  // zero matrix, trivially a strict contraction
  const double scale = norm_bound * (1.0 - u) / s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = g(i, j) * scale;
  return r;
}

Matrix3 random_unitary(std::uint64_t seed) {
  SeededRng rng(seed);
  const Matrix3 g = ginibre(rng);
  // Modified Gram-Schmidt on columns with re-orthogonalization; forcing the
  // implicit R diagonal positive-real makes the factor Haar-distributed.
  Matrix3 q = g;
  for (int j = 0; j < 3; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        Complex proj = 0.0;
        for (int i = 0; i < 3; ++i) proj += std::conj(q(i, k)) * q(i, j);
        for (int i = 0; i < 3; ++i) q(i, j) -= proj * q(i, k);
      }
    }
    double nrm = 0.0;
    for (int i = 0; i < 3; ++i) nrm += std::norm(q(i, j));
    nrm = std::sqrt(nrm);
    if (nrm < 1e-14) {
      // Degenerate Ginibre column (probability zero); restart with the next stream.
      return random_unitary(seed + 0x9e3779b97f4a7c15ULL);
    }
    // R(j,j) = nrm > 0, so the implicit R diagonal is already positive real.
    for (int i = 0; i < 3; ++i) q(i, j) /= nrm;
  }
  return q;
}

}  // namespace mudom
