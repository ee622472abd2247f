#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "mzscatter/fringe_analysis.hpp"

namespace mzscatter::testing {

// Open-channel interferometers spanning the reflection-dominated and the
// semiclassical regimes, including evanescent dressed states at small k_x l.
inline InterferometerSetup random_setup(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto log_uniform = [&](double lo, double hi) {
    return std::exp(std::log(lo) + unit(rng) * (std::log(hi) - std::log(lo)));
  };
  const double kxl = log_uniform(3.0, 300.0);
  const double l = log_uniform(2e-6, 5e-5);
  const double L = log_uniform(l, 0.1);
  const double eps = -1.0 + 2.0 * unit(rng);
  InterferometerSetup s =
      InterferometerSetup::from_kxl(kSodiumMass, kxl, l, L, eps, 0.0);
  s.delta = std::max((-0.5 + unit(rng)) * s.omega,
                     0.8 * critical_detuning(s.mass, s.k_x));
  return s;
}

}  // namespace mzscatter::testing
