#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "mudom/boundary.hpp"
#include "mudom/domain312.hpp"
#include "mudom/domain333.hpp"
#include "mudom/linalg.hpp"
#include "mudom/rng.hpp"
#include "support.hpp"

using namespace mudom;
using namespace mudom::testsupport;

TEST_CASE("unitary images satisfy the boundary relations") {
  for (std::uint64_t seed : {50ull, 51ull, 52ull}) {
    const Matrix3 u = random_unitary(seed);
    CHECK(k_deviation(pi333(u)) < 1e-10);
    CHECK(k1_deviation(pi312(u)) < 1e-10);
  }
  const UnitaryImageReport rep = unitary_image_checks(60, 10, light_config());
  CHECK(rep.count == 10);
  CHECK(rep.worst_k_deviation < 1e-10);
  CHECK(rep.worst_k1_deviation < 1e-10);
  CHECK(rep.all_inside_k);
  CHECK(rep.all_inside_k1);
}

TEST_CASE("membership fixtures for the boundary sets") {
  const ScanConfig cfg = light_config();
  CHECK(in_K(constant7(1.0), cfg).state == Region::Inside);
  CHECK(in_K(Point7{}, cfg).state == Region::Outside);  // |x7| = 0
  CHECK(in_K(constant7(Complex(0, 1)), cfg).state == Region::Outside);  // outside the closure

  CHECK(in_K1(pi312(identity3()), cfg).state == Region::Inside);
  CHECK(in_K1(Point5{0, 0, 0, 0, 0}, cfg).state == Region::Outside);
}

TEST_CASE("parametrizations recover their inputs") {
  const Complex c4(0.3, 0.1), c5(-0.2, 0.4), c6(0.5, 0), u(0, 1);
  const Point7 x = param_K(c4, c5, c6, u);
  CHECK(x[3] == c4);
  CHECK(x[4] == c5);
  CHECK(x[5] == c6);
  CHECK(x[6] == u);
  CHECK(x[0] == std::conj(c6) * u);
  CHECK(x[1] == std::conj(c5) * u);
  CHECK(x[2] == std::conj(c4) * u);
  CHECK(k_deviation(x) < 1e-15);
  CHECK(dist7(param_K(x[3], x[4], x[5], x[6]), x) == 0.0);

  const Complex y1(1.8, 0.2), y2(0.4, -0.3), u1(1, 0);
  const Point5 xt = param_K1(y1, y2, u1);
  CHECK(xt.y1 == y1);
  CHECK(xt.y2 == y2);
  CHECK(xt.x3 == u1);
  CHECK(xt.x1 == std::conj(y2) * u1);
  CHECK(xt.x2 == std::conj(y1) * u1);
  CHECK(k1_deviation(xt) < 1e-15);
}

TEST_CASE("parametrization gates") {
  CHECK_THROWS_AS(param_K(1.5, 0, 0, 1), DomainError);
  CHECK_THROWS_AS(param_K(0, 0, 0, Complex(0.9, 0)), DomainError);
  CHECK_THROWS_AS(param_K1(2.3, 0, 1), DomainError);
  CHECK_THROWS_AS(param_K1(0, 1.5, 1), DomainError);
  CHECK_NOTHROW(param_K1(2.0, 1.0, Complex(0, -1)));
}

TEST_CASE("the parameter box maps into, not onto, the relation set") {
  // all K relations hold, yet the base triple (1, 0.3, 0.5) leaves the
  // tetrablock closure, so the point is outside the closed domain
  const ScanConfig cfg = light_config();
  const Point7 x = param_K(0.3, 1.0, 0.5, 1.0);
  CHECK(k_deviation(x) < 1e-15);
  CHECK(in_Gamma_333(x, cfg).state == Region::Outside);
  CHECK(in_K(x, cfg).state == Region::Outside);
}

TEST_CASE("fiber scans split on the unimodular coordinates") {
  const ScanConfig cfg = light_config();

  const FiberBoundaryReport both = fiber_boundary_check(constant7(1.0), cfg);
  CHECK(both.case_id == 2);  // |x4| = 1 takes priority
  CHECK(both.worst_deviation < 1e-9);
  CHECK(both.consistent_with_k);

  const Point7 interior = param_K(Complex(0.3, 0.1), Complex(-0.2, 0.4), 0.5, Complex(0, 1));
  const FiberBoundaryReport c1 = fiber_boundary_check(interior, cfg);
  CHECK(c1.case_id == 1);
  CHECK(c1.worst_deviation < 1e-9);
  CHECK(c1.consistent_with_k);

  // antidiagonal unitary block: x = (0, b, 0, 0, -ac, 0, -abc); its z-tilde
  // fiber leaves the boundary inside the disc, so only y-tilde may be scanned
  Matrix3 anti;
  anti(0, 2) = 1.0;
  anti(1, 1) = Complex(0, 1);
  anti(2, 0) = 1.0;
  const Point7 x3 = pi333(anti);
  CHECK(std::abs(x3[1] - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(x3[3]) < 1e-15);
  const FiberBoundaryReport c3 = fiber_boundary_check(x3, cfg);
  CHECK(c3.case_id == 3);
  CHECK(c3.worst_deviation < 1e-9);
  CHECK(c3.consistent_with_k);

  // mirror image for case 2: swap block up top, unimodular corner below
  Matrix3 swap12;
  swap12(0, 1) = 1.0;
  swap12(1, 0) = 1.0;
  swap12(2, 2) = Complex(0.6, 0.8);
  const Point7 x2 = pi333(swap12);
  CHECK(std::abs(x2[1]) < 1e-15);
  CHECK(std::abs(std::abs(x2[3]) - 1.0) < 1e-15);
  const FiberBoundaryReport c2 = fiber_boundary_check(x2, cfg);
  CHECK(c2.case_id == 2);
  CHECK(c2.worst_deviation < 1e-9);
  CHECK(c2.consistent_with_k);

  // outside point dressed in the K relations: the scanned fiber must flag it
  const Point7 bad = param_K(0.3, 1.0, 0.5, 1.0);
  const FiberBoundaryReport cbad = fiber_boundary_check(bad, cfg);
  CHECK(cbad.case_id == 3);
  CHECK(cbad.worst_deviation > 1.0);
  CHECK(cbad.consistent_with_k);
}

TEST_CASE("eta bridge joins the two boundary sets") {
  const ScanConfig cfg = light_config();

  const BridgeReport on = k_bridge_check(constant7(1.0), cfg);
  CHECK(on.k_state == Region::Inside);
  CHECK(on.k1_joint_state == Region::Inside);
  CHECK(on.agree);
  CHECK(on.worst_deviation < 1e-9);

  const BridgeReport off = k_bridge_check(Point7{}, cfg);
  CHECK(off.k_state == Region::Outside);
  CHECK(off.k1_joint_state == Region::Outside);
  CHECK(off.agree);

  for (std::uint64_t seed : {61ull, 62ull, 63ull}) {
    const BridgeReport u = k_bridge_check(pi333(random_unitary(seed)), cfg);
    CHECK(u.k_state == Region::Inside);
    CHECK(u.agree);
  }
}
