#include <benchmark/benchmark.h>

#include "jcm/dense_oracle.hpp"
#include "jcm/dynamics.hpp"
#include "jcm/sweep.hpp"
#include "jcm/thermal.hpp"

namespace {

void BM_ThermalReport(benchmark::State& state) {
  const double kappa = static_cast<double>(state.range(0)) / 10.0;
  const jcm::ThermalConfig cfg{jcm::ModelParams::resonant(kappa), 1.0, 1e-12, 100000};
  for (auto _ : state) {
    benchmark::DoNotOptimize(jcm::thermal_report(cfg));
  }
}
BENCHMARK(BM_ThermalReport)->Arg(5)->Arg(25)->Arg(50);

void BM_DynamicsReport(benchmark::State& state) {
  const double nbar = static_cast<double>(state.range(0));
  const jcm::QuenchConfig cfg{jcm::ModelParams::resonant(1.0), jcm::SourceModel::poisson(nbar),
                              1e-14, 100000};
  const double t = jcm::tau_to_time(2.0, nbar, cfg.params.kappa);
  for (auto _ : state) {
    benchmark::DoNotOptimize(jcm::dynamics_report(cfg, t));
  }
}
BENCHMARK(BM_DynamicsReport)->Arg(1)->Arg(5)->Arg(50);

void BM_DenseOracleEntropy(benchmark::State& state) {
  const jcm::ThermalConfig cfg{jcm::ModelParams::resonant(2.5),
                               static_cast<double>(state.range(0)) / 10.0, 1e-12, 100000};
  const jcm::BlockDensity rho = jcm::joint_density(cfg);
  const int n_photons = static_cast<int>(rho.blocks.size());
  for (auto _ : state) {
    benchmark::DoNotOptimize(jcm::dense_entropy(jcm::dense_embed(rho, n_photons)));
  }
  state.counters["dim"] = 2.0 * (n_photons + 1);
}
BENCHMARK(BM_DenseOracleEntropy)->Arg(5)->Arg(20)->Arg(40);

void BM_QuenchSweepPoint(benchmark::State& state) {
  const jcm::QuenchConfig cfg{jcm::ModelParams::resonant(1.0),
                              jcm::SourceModel::geometric(50.0), 1e-14, 100000};
  double tau = 0.5;
  for (auto _ : state) {
    tau += 1e-6; // defeat caching across iterations
    const double t = jcm::tau_to_time(tau, 50.0, cfg.params.kappa);
    benchmark::DoNotOptimize(jcm::von_neumann_entropy(jcm::joint_density_t(cfg, t)));
  }
}
BENCHMARK(BM_QuenchSweepPoint);

} // namespace

BENCHMARK_MAIN();
