#include "mzscatter/fringe_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/tools/roots.hpp>

#include "mzscatter/error.hpp"

namespace mzscatter {

namespace {

constexpr double kGoldenTolerance = 1e-10;
constexpr double kAmbiguityTolerance = 1e-12;
constexpr double kBisectionTolerance = 1e-12;

template <class F>
double golden_section_minimize(F&& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

std::vector<double> uniform_phase_grid(int n_points) {
  std::vector<double> grid(n_points);
  for (int i = 0; i < n_points; ++i) {
    grid[i] = -kPi + 2.0 * kPi * static_cast<double>(i) / (n_points - 1);
  }
  return grid;
}

// Index of the single global-minimum cluster on a periodic sample (the last
// grid point duplicates the first and is ignored).
int unique_minimum_index(const std::vector<double>& values) {
  const int n = static_cast<int>(values.size()) - 1;
  const auto begin = values.begin();
  const int best =
      static_cast<int>(std::min_element(begin, begin + n) - begin);
  const double floor = values[best] + kAmbiguityTolerance;

  int members = 0;
  int clusters = 0;
  for (int i = 0; i < n; ++i) {
    const bool in = values[i] <= floor;
    const bool prev_in = values[(i + n - 1) % n] <= floor;
    if (in) ++members;
    if (in && !prev_in) ++clusters;
  }
  if (members == n || clusters > 1) {
    throw Error(ErrorKind::kAmbiguousMinimum,
                "fringe has no unique global minimum");
  }
  return best;
}

double arg_ratio_shift(const std::pair<Complex, Complex>& groups) {
  return wrap_phase(std::arg(groups.first / groups.second) - kPi);
}

}  // namespace

InterferometerSetup InterferometerSetup::from_velocity(double mass, double v_x,
                                                       double l, double L,
                                                       double epsilon,
                                                       double delta) {
  InterferometerSetup s;
  s.mass = mass;
  s.k_x = mass * v_x / kHbar;
  s.l = l;
  s.L = L;
  s.omega = (kPi + epsilon) * v_x / l;
  s.delta = delta;
  s.validate();
  return s;
}

InterferometerSetup InterferometerSetup::from_kxl(double mass, double kx_l,
                                                  double l, double L,
                                                  double epsilon,
                                                  double delta) {
  const double k_x = kx_l / l;
  return from_velocity(mass, kHbar * k_x / mass, l, L, epsilon, delta);
}

void InterferometerSetup::validate() const {
  for (double v : {mass, k_x, l, L, omega, delta}) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::kInvalidArgument, "setup values must be finite");
    }
  }
  if (!(mass > 0.0) || !(k_x > 0.0) || !(l > 0.0) || !(L > 0.0) ||
      omega < 0.0) {
    throw Error(ErrorKind::kInvalidArgument,
                "setup needs mass, k_x, l, L > 0 and omega >= 0");
  }
}

ChannelKinematics InterferometerSetup::kinematics() const {
  validate();
  return channel_kinematics(mass, k_x, omega, delta);
}

SemiclassicalInput InterferometerSetup::semiclassical(
    const std::array<double, 3>& phases) const {
  validate();
  const double v = velocity();
  return SemiclassicalInput{omega, delta, l / v, L / v, phases};
}

InterferometerSetup InterferometerSetup::with_epsilon(double epsilon) const {
  InterferometerSetup s = *this;
  s.omega = (kPi + epsilon) * velocity() / l;
  s.validate();
  return s;
}

std::string_view to_string(FringeMode mode) {
  switch (mode) {
    case FringeMode::semiclassical: return "semiclassical";
    case FringeMode::quantum_exact: return "exact";
    case FringeMode::quantum_direct: return "direct";
    case FringeMode::quantum_mz: return "mz";
  }
  return "unknown";
}

std::optional<FringeMode> parse_fringe_mode(std::string_view text) {
  for (FringeMode mode :
       {FringeMode::semiclassical, FringeMode::quantum_exact,
        FringeMode::quantum_direct, FringeMode::quantum_mz}) {
    if (text == to_string(mode)) return mode;
  }
  return std::nullopt;
}

std::array<double, 3> phases_for(double composite_phase) {
  return {0.0, 0.0, composite_phase};
}

FringeModel::FringeModel(const InterferometerSetup& setup, FringeMode mode)
    : setup_(setup), mode_(mode) {
  setup_.validate();
  if (mode_ == FringeMode::semiclassical) return;

  const ChannelKinematics kin = setup_.kinematics();
  flux_weight_ = kin.excited_flux_weight();
  const LaserGeometry geom = setup_.geometry();
  if (mode_ == FringeMode::quantum_exact) {
    const auto lasers = laser_transfers(geom, LaserDrive(kin.omega), kin);
    first_two_ = lasers[0].entries * lasers[1].entries;
    third_phase_free_ = lasers[2];
  } else {
    decomposition_ = decompose_interferometer(geom, kin);
  }
}

Complex FringeModel::amplitude(double composite_phase) const {
  const auto phases = phases_for(composite_phase);
  switch (mode_) {
    case FringeMode::semiclassical: {
      const SclPathSet paths =
          scl_path_amplitudes(setup_.semiclassical(phases));
      return paths.a2 + paths.a3;
    }
    case FringeMode::quantum_exact: {
      TransferMatrix4 total;
      total.entries =
          first_two_ *
          apply_phase_factorization(third_phase_free_, composite_phase)
              .entries;
      return extract_transmission(total);
    }
    case FringeMode::quantum_direct:
      return direct_mz_transmission(*decomposition_, phases);
    case FringeMode::quantum_mz:
      return mz_transmission(*decomposition_, phases);
  }
  return 0.0;
}

double FringeModel::probability(double composite_phase) const {
  return flux_weight_ * std::norm(amplitude(composite_phase));
}

std::optional<std::pair<Complex, Complex>> FringeModel::harmonic_groups()
    const {
  switch (mode_) {
    case FringeMode::semiclassical: {
      const SclPathSet paths =
          scl_path_amplitudes(setup_.semiclassical(phases_for(0.0)));
      return std::pair{paths.a2, paths.a3};
    }
    case FringeMode::quantum_direct:
      return std::pair{decomposition_->find("A2").value,
                       decomposition_->find("A3").value};
    case FringeMode::quantum_mz:
      return mz_groups(*decomposition_);
    case FringeMode::quantum_exact:
      return std::nullopt;
  }
  return std::nullopt;
}

FringeScan fringe_scan(const InterferometerSetup& setup, FringeMode mode,
                       int n_points) {
  if (n_points < 3) {
    throw Error(ErrorKind::kInvalidArgument, "fringe scan needs >= 3 points");
  }
  FringeScan scan;
  scan.mode = mode;
  scan.grid = uniform_phase_grid(n_points);
  scan.probabilities.assign(n_points, 0.0);
  try {
    const FringeModel model(setup, mode);
    for (int i = 0; i < n_points; ++i) {
      scan.probabilities[i] = model.probability(scan.grid[i]);
    }
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::kClosedChannel) throw;
    scan.closed_channel = true;
  }
  return scan;
}

double visibility(const FringeScan& scan) {
  if (scan.probabilities.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "empty fringe scan");
  }
  const auto [lo, hi] = std::minmax_element(scan.probabilities.begin(),
                                            scan.probabilities.end());
  if (*hi == 0.0) {
    throw Error(ErrorKind::kUndefined, "visibility of an all-zero fringe");
  }
  return (*hi - *lo) / (*hi + *lo);
}

ShiftResult phase_shift(const InterferometerSetup& setup, FringeMode mode,
                        int n_grid) {
  if (n_grid < 3) {
    throw Error(ErrorKind::kInvalidArgument, "shift search needs >= 3 points");
  }
  const FringeModel model(setup, mode);
  const std::vector<double> grid = uniform_phase_grid(n_grid);
  std::vector<double> values(n_grid);
  for (int i = 0; i < n_grid; ++i) values[i] = model.probability(grid[i]);

  const int best = unique_minimum_index(values);
  const double step = grid[1] - grid[0];
  const auto p = [&](double phi) { return model.probability(phi); };
  const double located = golden_section_minimize(
      p, grid[best] - step, grid[best] + step, kGoldenTolerance);

  ShiftResult result;
  result.numeric = wrap_phase(located);
  result.min_value = p(located);

  double p_max = *std::max_element(values.begin(), values.end());
  if (const auto groups = model.harmonic_groups()) {
    result.arg_ratio = arg_ratio_shift(*groups);
    result.delta_phi = *result.arg_ratio;
    result.method = ShiftMethod::arg_ratio;
    const double peak =
        std::abs(groups->first) + std::abs(groups->second);
    const double weight =
        mode == FringeMode::semiclassical ? 1.0 : setup.kinematics().excited_flux_weight();
    p_max = weight * peak * peak;
  } else {
    result.delta_phi = result.numeric;
    result.method = ShiftMethod::numeric_min;
  }
  result.visibility = p_max > 0.0
                          ? (p_max - result.min_value) / (p_max + result.min_value)
                          : 0.0;
  return result;
}

EpsilonScan epsilon_scan(const InterferometerSetup& setup, double eps_min,
                         double eps_max, int n_points) {
  if (!(eps_max > eps_min) || n_points < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "epsilon scan needs eps_max > eps_min and >= 2 points");
  }
  const LaserGeometry geom = setup.geometry();
  const auto moduli = [&](double eps) {
    const ChannelKinematics kin = setup.with_epsilon(eps).kinematics();
    const PathDecomposition dec = decompose_interferometer(geom, kin);
    return std::pair{std::abs(dec.find("A2").value),
                     std::abs(dec.find("A3").value)};
  };
  const auto gap = [&](double eps) {
    const auto [a2, a3] = moduli(eps);
    return a2 - a3;
  };

  EpsilonScan scan;
  std::optional<std::pair<double, double>> bracket;
  for (int i = 0; i < n_points; ++i) {
    const double eps =
        eps_min + (eps_max - eps_min) * static_cast<double>(i) / (n_points - 1);
    const auto [a2, a3] = moduli(eps);
    scan.grid.push_back(eps);
    scan.abs_a2.push_back(a2);
    scan.abs_a3.push_back(a3);
    if (i == 0) continue;
    const double before = scan.abs_a2[i - 1] - scan.abs_a3[i - 1];
    const double now = a2 - a3;
    if ((before < 0.0 && now >= 0.0) || (before > 0.0 && now <= 0.0)) {
      ++scan.crossings;
      if (!bracket) bracket = std::pair{scan.grid[i - 1], eps};
    }
  }
  if (!bracket && scan.abs_a2.front() == scan.abs_a3.front()) {
    scan.epsilon_o = scan.grid.front();
    return scan;
  }
  if (bracket) {
    if (gap(bracket->second) == 0.0) {
      scan.epsilon_o = bracket->second;
    } else {
      const auto root = boost::math::tools::bisect(
          gap, bracket->first, bracket->second, [](double a, double b) {
            return std::abs(b - a) <= kBisectionTolerance;
          });
      scan.epsilon_o = 0.5 * (root.first + root.second);
    }
  }
  return scan;
}

EpsilonScan find_epsilon_o(const InterferometerSetup& setup, double eps_min,
                           double eps_max, int n_points) {
  EpsilonScan scan = epsilon_scan(setup, eps_min, eps_max, n_points);
  if (!scan.epsilon_o) {
    throw Error(ErrorKind::kNoBracket,
                "|A2| - |A3| does not change sign in the epsilon range");
  }
  return scan;
}

std::vector<ShiftSweepRow> shift_sweep_kxl(double mass, double l, double L,
                                           double delta,
                                           std::span<const double> kxl_grid) {
  std::vector<ShiftSweepRow> rows;
  rows.reserve(kxl_grid.size());
  for (double kxl : kxl_grid) {
    ShiftSweepRow row;
    row.kx_l = kxl;
    row.non_regression = kxl < kReflectionRegimeKxl;
    try {
      const auto setup =
          InterferometerSetup::from_kxl(mass, kxl, l, L, 0.0, delta);
      try {
        row.delta_phi_direct =
            phase_shift(setup, FringeMode::quantum_direct).delta_phi;
      } catch (const Error& err) {
        row.error = std::string("direct: ") + err.what();
      }
      try {
        row.delta_phi_exact =
            phase_shift(setup, FringeMode::quantum_exact).delta_phi;
      } catch (const Error& err) {
        if (!row.error.empty()) row.error += "; ";
        row.error += std::string("exact: ") + err.what();
      }
    } catch (const Error& err) {
      row.error = err.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

DopplerReport doppler_robustness(const InterferometerSetup& setup,
                                 FringeMode mode,
                                 std::optional<double> offset) {
  const double spread = offset.value_or(2.0 * setup.velocity() / setup.L);
  DopplerReport report;
  report.deltas = {setup.delta - spread, setup.delta, setup.delta + spread};
  for (int i = 0; i < 3; ++i) {
    InterferometerSetup shifted = setup;
    shifted.delta = report.deltas[i];
    report.shifts[i] = phase_shift(shifted, mode).delta_phi;
  }
  const double center = report.shifts[1];
  const double worst = std::max(std::abs(report.shifts[0] - center),
                                std::abs(report.shifts[2] - center));
  if (worst == 0.0) {
    report.relative_spread = 0.0;
  } else {
    report.relative_spread = center == 0.0
                                 ? std::numeric_limits<double>::infinity()
                                 : worst / std::abs(center);
  }
  return report;
}

}  // namespace mzscatter
