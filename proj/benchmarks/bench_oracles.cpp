// Microbenchmarks for the scan-based oracles and their closed-form kernels.
// Grid sizes sweep the same knob the CLI exposes, so throughput here maps
// directly onto --grid choices.
#include <benchmark/benchmark.h>

#include "mudom/boundary.hpp"
#include "mudom/domain312.hpp"
#include "mudom/domain333.hpp"
#include "mudom/linalg.hpp"
#include "mudom/rng.hpp"
#include "mudom/tetrablock.hpp"
#include "mudom/types.hpp"

namespace {

using namespace mudom;

ScanConfig grid_config(int n) {
  ScanConfig cfg;
  cfg.torus_n = n;
  cfg.disc_ntheta = n;
  cfg.disc_nr = n / 4 < 2 ? 2 : n / 4;
  cfg.refine_iters = 25;
  return cfg;
}

Point7 interior_point() { return pi333(random_contraction(17, 0.8)); }

void bm_torus_membership(benchmark::State& state) {
  const ScanConfig cfg = grid_config(static_cast<int>(state.range(0)));
  const Point7 x = interior_point();
  for (auto _ : state) benchmark::DoNotOptimize(in_G_333(x, cfg));
}
BENCHMARK(bm_torus_membership)->Arg(64)->Arg(128)->Arg(256)->Arg(512)
    ->Unit(benchmark::kMillisecond);

void bm_fiberwise_membership(benchmark::State& state) {
  const ScanConfig cfg = grid_config(static_cast<int>(state.range(0)));
  const Point7 x = interior_point();
  for (auto _ : state) benchmark::DoNotOptimize(in_G_333_fiberwise(x, FiberKind::Z, cfg));
}
BENCHMARK(bm_fiberwise_membership)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void bm_eta_bridge_membership(benchmark::State& state) {
  const ScanConfig cfg = grid_config(static_cast<int>(state.range(0)));
  const Point7 x = interior_point();
  for (auto _ : state) benchmark::DoNotOptimize(in_G_via_eta(x, cfg));
}
BENCHMARK(bm_eta_bridge_membership)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void bm_mu(benchmark::State& state) {
  const ScanConfig cfg = grid_config(static_cast<int>(state.range(0)));
  const Matrix3 a = random_contraction(23, 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(mu_E333(a, cfg));
}
BENCHMARK(bm_mu)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void bm_tetra_margin(benchmark::State& state) {
  const Point7 x = interior_point();
  const Point3 c{x[0], x[3], x[4]};
  for (auto _ : state) benchmark::DoNotOptimize(tetra_margin(c));
}
BENCHMARK(bm_tetra_margin);

void bm_r_poly(benchmark::State& state) {
  const Point7 x = interior_point();
  const Complex z{0.3, 0.4};
  for (auto _ : state) benchmark::DoNotOptimize(r_poly(x, z, z, z));
}
BENCHMARK(bm_r_poly);

void bm_operator_norm(benchmark::State& state) {
  const Matrix3 a = random_contraction(29, 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(operator_norm(a));
}
BENCHMARK(bm_operator_norm);

void bm_k_bridge(benchmark::State& state) {
  const ScanConfig cfg = grid_config(96);
  const Point7 x = pi333(random_unitary(31));
  for (auto _ : state) benchmark::DoNotOptimize(k_bridge_check(x, cfg));
}
BENCHMARK(bm_k_bridge)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
