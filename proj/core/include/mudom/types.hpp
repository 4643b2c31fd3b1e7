// Shared value types for the mu-synthesis domain oracles.
#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace mudom {

using Complex = std::complex<double>;

// Row-major dense matrices; small enough that closed-form algebra beats
// a general linear-algebra dependency.
struct Matrix2 {
  std::array<std::array<Complex, 2>, 2> a{};
  Complex& operator()(int i, int j) { return a[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
  const Complex& operator()(int i, int j) const { return a[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
};

struct Matrix3 {
  std::array<std::array<Complex, 3>, 3> a{};
  Complex& operator()(int i, int j) { return a[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
  const Complex& operator()(int i, int j) const { return a[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
};

// Symmetrized-bidisc point (s, p) = (z1 + z2, z1 z2).
struct Point2 {
  Complex s{}, p{};
};

// Tetrablock point (c1, c2, c3) = (b11, b22, det B).
struct Point3 {
  Complex c1{}, c2{}, c3{};
};

// E(3;2;1,2) quotient coordinates (x1, x2, x3, y1, y2):
// x1 = a11, x2 = detA12 + detA13, x3 = det A, y1 = a22 + a33, y2 = detA23.
struct Point5 {
  Complex x1{}, x2{}, x3{}, y1{}, y2{};
};

// E(3;3;1,1,1) quotient coordinates, 0-indexed storage for x1..x7.
struct Point7 {
  std::array<Complex, 7> x{};
  Complex& operator[](int i) { return x[static_cast<size_t>(i)]; }
  const Complex& operator[](int i) const { return x[static_cast<size_t>(i)]; }
};

// Single knob bundle for every scan-based oracle.
// Invariants: torus_n >= 8, disc_nr >= 2, disc_ntheta >= 8, refine_iters >= 0,
// tol > 0, boundary_band >= tol.
struct ScanConfig {
  int torus_n = 512;
  int disc_nr = 64;
  int disc_ntheta = 256;
  int refine_iters = 40;
  double tol = 1e-9;
  double boundary_band = 1e-7;
};

enum class Region { Inside, BoundaryBand, Outside };

// margin is a signed distance proxy: positive means inside, magnitudes are
// comparable only within one oracle family. witness holds the arg-max / zero
// location that decided the margin (layout documented per operation).
struct Verdict {
  Region state = Region::Outside;
  double margin = 0.0;
  std::vector<Complex> witness;
  ScanConfig config;
};

// Open-domain (G-type) state mapping: symmetric banding around the boundary.
Verdict open_verdict(double margin, std::vector<Complex> witness, const ScanConfig& cfg);

// Closed-domain (Gamma-type) mapping: boundary points are members, so
// Inside iff margin >= -band, Outside iff margin < -10*band, band in between.
Verdict closed_verdict(double margin, std::vector<Complex> witness, const ScanConfig& cfg);

enum class Fault {
  DenominatorVanishes,
  SingularResolvent,
  FiberBaseOutside,
  TargetNotInG,
  TargetNotOutside,
  SeparationNotCertified,
  Lambda0OutOfRange,
  DomainViolation,
  DuplicateNodes,
  PathLeavesGamma,
  InvalidIndexPair,
  NonFiniteInput,
};

const char* fault_name(Fault f);

class DomainError : public std::runtime_error {
 public:
  DomainError(Fault fault, const std::string& message)
      : std::runtime_error(message), fault_(fault) {}
  Fault fault() const { return fault_; }

 private:
  Fault fault_;
};

bool is_finite(double v);
bool is_finite(Complex z);
bool is_finite(const Point2& p);
bool is_finite(const Point3& p);
bool is_finite(const Point5& p);
bool is_finite(const Point7& p);
bool is_finite(const Matrix2& m);
bool is_finite(const Matrix3& m);

// Throws DomainError(NonFiniteInput) when a NaN/Inf reaches a public entry point.
void require_finite(bool ok, const char* what);

void validate(const ScanConfig& cfg);

}  // namespace mudom
