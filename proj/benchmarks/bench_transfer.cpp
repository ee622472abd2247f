#include <benchmark/benchmark.h>

#include "mzscatter/fringe_analysis.hpp"
#include "mzscatter/path_expansion.hpp"
#include "mzscatter/transfer_matrix.hpp"

namespace {

using namespace mzscatter;

InterferometerSetup reference_setup() {
  return InterferometerSetup::from_velocity(kSodiumMass, 0.01, 1e-5, 0.1, 0.0);
}

void BM_SingleLaserTransfer(benchmark::State& state) {
  const auto s = reference_setup();
  const ChannelKinematics kin = s.kinematics();
  const LaserGeometry geom = s.geometry();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        single_laser_transfer(geom.left_edge(1), geom.right_edge(1), 0.3, kin));
  }
}
BENCHMARK(BM_SingleLaserTransfer);

void BM_ComposeInterferometer(benchmark::State& state) {
  const auto s = reference_setup();
  const ChannelKinematics kin = s.kinematics();
  const LaserDrive drive(s.omega, {0.0, 0.0, 1.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        extract_transmission(compose_interferometer(s.geometry(), drive, kin)));
  }
}
BENCHMARK(BM_ComposeInterferometer);

void BM_PathDecomposition(benchmark::State& state) {
  const auto s = reference_setup();
  const ChannelKinematics kin = s.kinematics();
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose_interferometer(s.geometry(), kin));
  }
}
BENCHMARK(BM_PathDecomposition);

void BM_FringeScan(benchmark::State& state) {
  const auto s = reference_setup();
  const auto mode = static_cast<FringeMode>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fringe_scan(s, mode, kDefaultFringePoints));
  }
  state.SetLabel(std::string(to_string(mode)));
}
BENCHMARK(BM_FringeScan)
    ->Arg(static_cast<int>(FringeMode::semiclassical))
    ->Arg(static_cast<int>(FringeMode::quantum_exact))
    ->Arg(static_cast<int>(FringeMode::quantum_mz))
    ->Unit(benchmark::kMicrosecond);

void BM_PhaseShift(benchmark::State& state) {
  const auto s = reference_setup();
  for (auto _ : state) {
    benchmark::DoNotOptimize(phase_shift(s, FringeMode::quantum_exact));
  }
}
BENCHMARK(BM_PhaseShift)->Unit(benchmark::kMicrosecond);

void BM_EpsilonScan(benchmark::State& state) {
  const auto s = reference_setup();
  for (auto _ : state) {
    benchmark::DoNotOptimize(epsilon_scan(s, -0.5, 0.5, 101));
  }
}
BENCHMARK(BM_EpsilonScan)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
