#include <benchmark/benchmark.h>

#include "gauge/connection.hpp"
#include "gauge/hodge.hpp"
#include "gauge/random_fields.hpp"
#include "gauge/transport.hpp"
#include "gauge/yang_mills.hpp"

using namespace gauge;

namespace {
const double kTau = 6.283185307179586476925287;

std::shared_ptr<Chart> t2(int n) {
  return Chart::torus("b2", {n, n}, {kTau, kTau}, FrameMetric::euclidean(2));
}

std::shared_ptr<Chart> t4(int n) {
  return Chart::torus("b4", {n, n, n, n}, {kTau, kTau, kTau, kTau},
                      FrameMetric::euclidean(4));
}
}  // namespace

static void BM_ExtD_Scalar_T2(benchmark::State& state) {
  auto ch = t2(int(state.range(0)));
  auto f = random_form_field<double>(ch, 1, 3, {1.0});
  for (auto _ : state) benchmark::DoNotOptimize(ext_d(f));
  state.SetItemsProcessed(state.iterations() * ch->total());
}
BENCHMARK(BM_ExtD_Scalar_T2)->Arg(64)->Arg(128)->Arg(256);

static void BM_HodgeStar_2Form_T4(benchmark::State& state) {
  auto ch = t4(int(state.range(0)));
  auto f = random_form_field<double>(ch, 2, 5, {1.0});
  for (auto _ : state) benchmark::DoNotOptimize(hodge_star(f));
  state.SetItemsProcessed(state.iterations() * ch->total());
}
BENCHMARK(BM_HodgeStar_2Form_T4)->Arg(8)->Arg(16);

static void BM_Curvature_SU2_T4(benchmark::State& state) {
  auto ch = t4(int(state.range(0)));
  ConnectionState<Eigen::Matrix2cd> c;
  c.group = Algebra::su2;
  c.omega = random_form_field<Eigen::Matrix2cd>(
      ch, 1, 7, {su2_basis(0), su2_basis(1), su2_basis(2)}, 0.4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(curvature(c));
  state.SetItemsProcessed(state.iterations() * ch->total());
}
BENCHMARK(BM_Curvature_SU2_T4)->Arg(8)->Arg(16);

static void BM_YMGradient_U1_T4(benchmark::State& state) {
  auto ch = t4(int(state.range(0)));
  ConnectionState<std::complex<double>> c;
  c.group = Algebra::u1;
  c.omega = random_form_field<std::complex<double>>(
      ch, 1, 9, {std::complex<double>(0, 1)}, 0.3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ym_gradient(c));
  state.SetItemsProcessed(state.iterations() * ch->total());
}
BENCHMARK(BM_YMGradient_U1_T4)->Arg(8)->Arg(16);

static void BM_HodgeDecompose_T2(benchmark::State& state) {
  auto ch = t2(int(state.range(0)));
  auto f = random_form_field<double>(ch, 1, 11, {1.0});
  for (auto _ : state) benchmark::DoNotOptimize(hodge_decompose(f, 1e-10));
}
BENCHMARK(BM_HodgeDecompose_T2)->Arg(32)->Arg(64);

static void BM_Transport_SU2(benchmark::State& state) {
  auto ch = Chart::window("w", {16, 16}, {-1, -1}, {1, 1},
                          FrameMetric::euclidean(2));
  ConnectionState<Eigen::Matrix2cd> c;
  c.group = Algebra::su2;
  c.omega = random_form_field<Eigen::Matrix2cd>(
      ch, 1, 13, {su2_basis(0), su2_basis(1), su2_basis(2)}, 0.4, 1);
  Curve seg;
  seg.dim = 2;
  seg.position = [](double t, double* x) {
    x[0] = -0.8 + 1.6 * t;
    x[1] = 0.3 * std::sin(kTau * t);
  };
  double step = 1.0 / double(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(transport(c, seg, step));
}
BENCHMARK(BM_Transport_SU2)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
