#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "vacfluct/dispersion.hpp"
#include "vacfluct/oracle.hpp"
#include "vacfluct/reg_integrals.hpp"
#include "vacfluct/smearing.hpp"
#include "vacfluct/switching.hpp"

using namespace vacfluct;

static void BM_JClosed(benchmark::State &state) {
  double nu = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(j_closed(nu, 1, 0.3, IntegralOrder::cubic));
    nu += 1e-9;
  }
}
BENCHMARK(BM_JClosed);

static void BM_GaussTransformSmooth(benchmark::State &state) {
  const GaussianTransformSpec spec{0.3};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        gauss_transform([](double v) { return std::cos(v) / (1.0 + v * v); }, spec));
}
BENCHMARK(BM_GaussTransformSmooth);

// coeff_hat over decreasing beta: the Gaussian narrows onto the singularities.
static void BM_CoeffHat(benchmark::State &state) {
  const double beta = 1.0 / static_cast<double>(state.range(0));
  const Coefficient which = state.range(1) == 0 ? Coefficient::A : Coefficient::B;
  for (auto _ : state)
    benchmark::DoNotOptimize(coeff_hat(0.05, beta, which, {}));
}
BENCHMARK(BM_CoeffHat)->ArgsProduct({{10, 100, 1000}, {0, 1}})->Unit(benchmark::kMicrosecond);

static void BM_Dispersion(benchmark::State &state) {
  PhysicalConfig cfg;
  cfg.measure_time_tau = 100.0;
  cfg.packet_width_b = 0.5;
  const Route route = state.range(0) == 0 ? Route::closed_form : Route::raw_integral;
  for (auto _ : state)
    benchmark::DoNotOptimize(dispersion(cfg, Component::x_or_y, {}, route));
}
BENCHMARK(BM_Dispersion)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

static void BM_FullIntegral(benchmark::State &state) {
  const double a = 5.0 * (1.0 + 1.0 / 0.05);
  const KernelHandle K = make_kernel(
      "quartic",
      [a](double T) {
        const double r = a * a / (T * T + a * a);
        return r * r;
      },
      DecayClass::inverse_quartic);
  for (auto _ : state)
    benchmark::DoNotOptimize(full_integral(K, LorentzPlateau{1.0, 0.05}, 0.1, {}));
}
BENCHMARK(BM_FullIntegral)->Unit(benchmark::kMillisecond);

static void BM_MonteCarloOracle(benchmark::State &state) {
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        mc_gauss_oracle([](double v) { return std::cos(v); }, 0.5, 1 << 20, 1, threads));
  state.SetItemsProcessed(state.iterations() * (1 << 20));
}
BENCHMARK(BM_MonteCarloOracle)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_MAIN();
