#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <utility>
#include <vector>

#include "mudom/domain312.hpp"
#include "mudom/domain333.hpp"
#include "mudom/geometry.hpp"
#include "mudom/linalg.hpp"
#include "mudom/rng.hpp"
#include "support.hpp"

using namespace mudom;
using namespace mudom::testsupport;

namespace {

const Complex kI{0.0, 1.0};

std::vector<std::pair<double, Point7>> sample_loop(int n, double load) {
  std::vector<std::pair<double, Point7>> path;
  path.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) / n;
    path.emplace_back(t, pi333(scaled(random_unitary(300 + static_cast<std::uint64_t>(k)), load)));
  }
  return path;
}

double max_gap(const std::vector<Point7>& a, const std::vector<Point7>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int k = 0; k < 7; ++k) worst = std::max(worst, std::abs(a[i][k] - b[i][k]));
  return worst;
}

}  // namespace

TEST_CASE("segment between two members leaves the closed domain") {
  const ScanConfig cfg = medium_config();
  const NonConvexityWitness w = nonconvexity_witness(cfg);

  const Point7 ex{1.0, kI, kI, 1.0, 1.0, kI, kI};
  const Point7 ey{-kI, 1.0, -kI, -kI, -1.0, -kI, -1.0};
  for (int k = 0; k < 7; ++k) {
    CHECK(std::abs(w.x[k] - ex[k]) < 1e-15);
    CHECK(std::abs(w.y[k] - ey[k]) < 1e-15);
    CHECK(std::abs(w.midpoint[k] - 0.5 * (ex[k] + ey[k])) < 1e-15);
  }
  CHECK(w.vx.state == Region::Inside);
  CHECK(w.vy.state == Region::Inside);
  CHECK(w.vmid.state == Region::Outside);
}

TEST_CASE("commonly quoted second endpoint is not a member at all") {
  // its defining polynomial vanishes at (0, 1/2, i/3) inside the open
  // tridisc, so that variant cannot serve as a segment endpoint
  const ScanConfig cfg = medium_config();
  const Point7 quoted{-kI, 1.0, -kI, -kI, -1.0, kI, 1.0};
  CHECK(std::abs(r_poly(quoted, 0.0, 0.5, kI / 3.0)) < 1e-15);
  const Verdict v = in_Gamma_333(quoted, cfg);
  CHECK(v.state == Region::Outside);
  CHECK(v.margin < -1.0);
}

TEST_CASE("contraction deforms members to a point without leaving") {
  const ScanConfig cfg = light_config();
  const auto path = sample_loop(9, 0.7);

  const auto at0 = homotopy_H(path, 0.0, cfg);
  REQUIRE(at0.size() == path.size());
  for (const Point7& h : at0)
    for (int k = 0; k < 7; ++k) CHECK(h[k] == Complex{});

  const auto at1 = homotopy_H(path, 1.0, cfg);
  for (std::size_t i = 0; i < path.size(); ++i)
    for (int k = 0; k < 7; ++k) CHECK(at1[i][k] == path[i].second[k]);

  // the collapse branch and the scaling branch meet at the seam
  const auto left = homotopy_H(path, 0.5, cfg);
  const auto right = homotopy_H(path, 0.5 + 1e-13, cfg);
  CHECK(max_gap(left, right) < 1e-10);

  // interior stages stay members
  for (double s : {0.25, 0.75}) {
    const auto mid = homotopy_H(path, s, cfg);
    for (const Point7& h : mid) CHECK(in_Gamma_333(h, cfg).state != Region::Outside);
  }
}

TEST_CASE("contraction rejects bad stage parameters and bad samples") {
  const ScanConfig cfg = light_config();
  const auto path = sample_loop(4, 0.7);

  for (double s : {-0.1, 1.2}) {
    try {
      homotopy_H(path, s, cfg);
      CHECK(false);
    } catch (const DomainError& e) {
      CHECK(e.fault() == Fault::DomainViolation);
    }
  }

  auto bad = path;
  bad[1] = {0.25, constant7(kI)};
  try {
    homotopy_H(bad, 0.75, cfg);
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(e.fault() == Fault::PathLeavesGamma);
    CHECK(std::string(e.what()).find("t = 0.250000") != std::string::npos);
  }
}

TEST_CASE("truncated resolvent polynomial has hand-checked low orders") {
  const Point7 y = constant7(1.0);
  CHECK(std::abs(fn_polynomial(y, 0.5, 0.25, 0) - Complex{0.375}) < 1e-15);
  CHECK(std::abs(fn_polynomial(y, 0.5, 0.25, 1) - Complex{0.703125}) < 1e-15);
  CHECK(std::abs(fn_polynomial_eig(y, 0.5, 0.25, 0) - Complex{0.375}) < 1e-12);
  CHECK(std::abs(fn_polynomial_eig(y, 0.5, 0.25, 1) - Complex{0.703125}) < 1e-12);

  try {
    fn_polynomial(y, 0.5, 0.25, -1);
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(e.fault() == Fault::DomainViolation);
  }
  try {
    fn_polynomial_eig(y, 0.5, 0.25, -2);
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(e.fault() == Fault::DomainViolation);
  }
}

TEST_CASE("matrix and eigenvalue evaluations of the polynomial agree") {
  SeededRng rng(404);
  for (int trial = 0; trial < 120; ++trial) {
    const Point7 y = pi333(random_contraction(7000 + static_cast<std::uint64_t>(trial), 0.95));
    const Complex z0 = 0.9 * disc_sample(rng);
    const Complex w0 = 0.9 * disc_sample(rng);
    for (int n : {0, 1, 7, 40}) {
      const Complex a = fn_polynomial(y, z0, w0, n);
      const Complex b = fn_polynomial_eig(y, z0, w0, n);
      CHECK(std::abs(a - b) < 1e-9);
    }
  }
}

TEST_CASE("separation certificate for the segment midpoint") {
  // target inside the coordinate box: the polynomial route must close, with
  // the certified bound holding on every sampled member
  const ScanConfig cfg;  // stock scan, the certificate numbers are pinned to it
  const NonConvexityWitness w = nonconvexity_witness(cfg);
  const SeparationCertificate cert = separate(w.midpoint, cfg);
  CHECK(cert.kind == CertKind::FNPolynomial);
  CHECK(cert.n == 84);
  CHECK(cert.epsilon == doctest::Approx(0.11450096141814699).epsilon(1e-9));
  CHECK(cert.value_at_target == doctest::Approx(1.2053193397500788).epsilon(1e-9));
  CHECK(cert.sup_on_sample == doctest::Approx(0.8957140452135148).epsilon(1e-9));
  CHECK(cert.value_at_target > 1.0);
  CHECK(cert.sup_on_sample <= 1.0);
  CHECK(std::abs(cert.z0) <= 0.9 + 1e-9);
  CHECK(std::abs(cert.w0) <= 0.9 + 1e-9);
}

TEST_CASE("separation certificate outside the coordinate box") {
  const ScanConfig cfg = light_config();
  const SeparationCertificate cert = separate(constant7(2.0), cfg);
  CHECK(cert.kind == CertKind::TetraLift);
  CHECK(cert.triple == 1);
  CHECK(cert.triple_margin == doctest::Approx(-7.0).epsilon(1e-12));
}

TEST_CASE("separation refuses members as targets") {
  const ScanConfig cfg = light_config();
  for (const Point7& x : {constant7(1.0), Point7{}}) {
    try {
      separate(x, cfg);
      CHECK(false);
    } catch (const DomainError& e) {
      CHECK(e.fault() == Fault::TargetNotOutside);
    }
  }
}

TEST_CASE("hyperplane lift matches the retraction pairing") {
  SeededRng rng(405);
  for (int trial = 0; trial < 200; ++trial) {
    Hyperplane5 l;
    for (auto& c : l.a) c = rng.complex_normal();
    l.c = rng.complex_normal();
    const Complex eta = trial % 2 == 0 ? unit_sample(rng) : disc_sample(rng);
    const Hyperplane7 lift = hyperplane_lift(l, eta);
    CHECK(lift.c == l.c);
    CHECK(lift.a[0] == l.a[0]);
    CHECK(lift.a[1] == l.a[3]);
    CHECK(lift.a[2] == l.a[1]);
    CHECK(lift.a[3] == l.a[3] * eta);
    CHECK(lift.a[4] == l.a[1] * eta);
    CHECK(lift.a[5] == l.a[4] * eta);
    CHECK(lift.a[6] == l.a[2] * eta);

    const Point7 x = random7(rng, 1.5);
    const Point5 p = phi_eta(x, eta);
    Complex via7 = lift.c;
    for (int k = 0; k < 7; ++k) via7 += lift.a[k] * x[k];
    const Complex via5 =
        l.c + l.a[0] * p.x1 + l.a[1] * p.x2 + l.a[2] * p.x3 + l.a[3] * p.y1 + l.a[4] * p.y2;
    CHECK(std::abs(via7 - via5) < 1e-13);
  }
}
