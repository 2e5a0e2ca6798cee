#include <benchmark/benchmark.h>

#include <cmath>

#include "cmc/estimates.hpp"
#include "cmc/geomcheck.hpp"
#include "cmc/invariant_odes.hpp"
#include "cmc/numerics.hpp"
#include "cmc/profiles.hpp"

namespace {

// Integrable endpoint singularity of the distance-bound type.
void BM_QuadratureSingular(benchmark::State& state) {
  for (auto _ : state) {
    const double v = cmc::quad_singular(
        [](double, double from_a, double to_b) { return 1.0 / std::sqrt(from_a * to_b); }, -1.0,
        1.0, 1e-12);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_QuadratureSingular);

void BM_DistanceBound(benchmark::State& state) {
  const cmc::EstimateParams p{-1.0, 0.8, -0.3, {}};
  const double h = 0.9 * cmc::alpha_max(p);
  for (auto _ : state) benchmark::DoNotOptimize(cmc::distance_lower_bound(p, h));
}
BENCHMARK(BM_DistanceBound);

void BM_HyperbolicCylinderOde(benchmark::State& state) {
  const double H = 1.0;
  const double w = std::sqrt(4.0 * H * H - 1.0);
  const cmc::OdeSystem sys = cmc::hyperbolic_translation_system(H);
  const cmc::State y0{0.0, -1.0 / w, 0.0};
  for (auto _ : state) {
    const auto sol = cmc::integrate_ivp(sys, y0, {-M_PI / (2.0 * w), M_PI / (2.0 * w)}, 1e-12,
                                        1e-14);
    benchmark::DoNotOptimize(sol.max_invariant_drift());
  }
}
BENCHMARK(BM_HyperbolicCylinderOde);

void BM_FundamentalForms(benchmark::State& state) {
  const cmc::ProfileCurve p = cmc::make_profile({cmc::FamilyTag::RotTorusS2xR, 1.0, 0.0});
  const cmc::SurfaceMap X = cmc::chart_surface(p);
  for (auto _ : state) benchmark::DoNotOptimize(cmc::fundamental_forms_at(X, 1.0, 0.5).mean_curvature);
}
BENCHMARK(BM_FundamentalForms);

void BM_MeanCurvatureResidual(benchmark::State& state) {
  const cmc::ProfileCurve p = cmc::make_profile({cmc::FamilyTag::RotSphereH2xR, 0.7, 0.0});
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cmc::mean_curvature_residual(p, grid));
}
BENCHMARK(BM_MeanCurvatureResidual)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_TorusArgmax(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cmc::torus_height_argmax().H);
}
BENCHMARK(BM_TorusArgmax);

}  // namespace

BENCHMARK_MAIN();
