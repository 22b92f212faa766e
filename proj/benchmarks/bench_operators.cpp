#include <benchmark/benchmark.h>

#include "wgdr/projections.hpp"
#include "wgdr/trialfields.hpp"
#include "wgdr/verify.hpp"

using namespace wgdr;

namespace {

const PolyElement& element_for(int index) {
  static const PolyElement tet = PolyElement::reference_tetrahedron();
  static const PolyElement cube = PolyElement::unit_cube();
  static const PolyElement prism = PolyElement::right_triangular_prism();
  switch (index) {
    case 0:
      return tet;
    case 1:
      return cube;
    default:
      return prism;
  }
}

}  // namespace

static void BM_CompositeGradient(benchmark::State& state) {
  const PolyElement& el = element_for(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) {
    OperatorMatrix grad = composite_gradient(el, Family::Equal, k);
    benchmark::DoNotOptimize(grad.entries);
  }
}
BENCHMARK(BM_CompositeGradient)
    ->ArgsProduct({{0, 1, 2}, {0, 1, 2, 3}})
    ->Unit(benchmark::kMillisecond);

static void BM_ComplexCheck(benchmark::State& state) {
  const PolyElement& el = element_for(state.range(0));
  for (auto _ : state) {
    ComplexCheck check = check_complex(el, Family::Equal, static_cast<int>(state.range(1)));
    benchmark::DoNotOptimize(check);
  }
}
BENCHMARK(BM_ComplexCheck)->ArgsProduct({{0, 1}, {0, 2}})->Unit(benchmark::kMillisecond);

static void BM_ProjectorSlot2(benchmark::State& state) {
  const PolyElement& cube = element_for(1);
  const int k = static_cast<int>(state.range(0));
  const Projector projector(cube, Family::Equal, k);
  std::mt19937_64 rng(7);
  const TrialFields trial = polynomial_trial(k + 1, rng);
  for (auto _ : state) {
    WgCoefficients q2 = projector.slot2(trial.u);
    benchmark::DoNotOptimize(q2.values);
  }
}
BENCHMARK(BM_ProjectorSlot2)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_ExactnessReport(benchmark::State& state) {
  const PolyElement& el = element_for(state.range(0));
  for (auto _ : state) {
    VerificationReport report = exactness_report(el, Family::Equal, 0);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_ExactnessReport)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
