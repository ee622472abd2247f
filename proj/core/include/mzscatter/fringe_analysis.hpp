#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mzscatter/path_expansion.hpp"
#include "mzscatter/physics.hpp"
#include "mzscatter/semiclassical.hpp"
#include "mzscatter/transfer_matrix.hpp"

namespace mzscatter {

inline constexpr double kDefaultFreeFlight = 0.1;  // m
inline constexpr int kDefaultFringePoints = 1001;

// Monochromatic atom crossing the three lasers; every laser shares omega.
struct InterferometerSetup {
  double mass = kSodiumMass;
  double k_x = 0.0;
  double l = 0.0;
  double L = kDefaultFreeFlight;
  double omega = 0.0;
  double delta = 0.0;

  // Rabi frequency set by the pulse-area offset: omega = (pi + eps) v_x / l.
  static InterferometerSetup from_velocity(double mass, double v_x, double l,
                                           double L, double epsilon,
                                           double delta = 0.0);
  // k_x l fixed, velocity and omega following the pi-pulse condition.
  static InterferometerSetup from_kxl(double mass, double kx_l, double l,
                                      double L, double epsilon = 0.0,
                                      double delta = 0.0);

  double velocity() const { return kHbar * k_x / mass; }
  double pulse_area_offset() const { return omega * l / velocity() - kPi; }
  LaserGeometry geometry() const { return LaserGeometry(l, L); }
  ChannelKinematics kinematics() const;
  SemiclassicalInput semiclassical(const std::array<double, 3>& phases) const;
  InterferometerSetup with_epsilon(double epsilon) const;
  void validate() const;
};

enum class FringeMode { semiclassical, quantum_exact, quantum_direct, quantum_mz };

std::string_view to_string(FringeMode mode);
std::optional<FringeMode> parse_fringe_mode(std::string_view text);

// Phases realizing the composite phase Phi: (0, 0, Phi).
std::array<double, 3> phases_for(double composite_phase);

// Precomputed per setup; evaluates the excitation probability at any Phi.
class FringeModel {
 public:
  // Throws Error(kClosedChannel) for quantum modes below critical detuning.
  FringeModel(const InterferometerSetup& setup, FringeMode mode);

  FringeMode mode() const { return mode_; }
  double probability(double composite_phase) const;
  // Excited transmission amplitude (semiclassical: a2 + a3).
  Complex amplitude(double composite_phase) const;
  // Amplitude groups (carrying e^{-i Phi}, Phi-independent) for the modes
  // whose amplitude is exactly first-harmonic in Phi; nullopt for exact.
  std::optional<std::pair<Complex, Complex>> harmonic_groups() const;
  const std::optional<PathDecomposition>& decomposition() const {
    return decomposition_;
  }

 private:
  InterferometerSetup setup_;
  FringeMode mode_;
  double flux_weight_ = 1.0;
  std::optional<PathDecomposition> decomposition_;
  Matrix4 first_two_ = Matrix4::Identity();
  TransferMatrix4 third_phase_free_;
};

struct FringeScan {
  std::vector<double> grid;
  std::vector<double> probabilities;
  FringeMode mode = FringeMode::semiclassical;
  bool closed_channel = false;
};

// Uniform grid on [-pi, pi] with both endpoints. A closed excited channel
// yields an all-zero scan with closed_channel set.
FringeScan fringe_scan(const InterferometerSetup& setup, FringeMode mode,
                       int n_points = kDefaultFringePoints);

// (Pmax - Pmin) / (Pmax + Pmin). Throws Error(kUndefined) when Pmax == 0.
double visibility(const FringeScan& scan);

enum class ShiftMethod { arg_ratio, numeric_min };

struct ShiftResult {
  double delta_phi = 0.0;             // reported shift, wrapped to (-pi, pi]
  std::optional<double> arg_ratio;    // analytic first-harmonic route
  double numeric = 0.0;               // golden-section minimum location
  double min_value = 0.0;
  double visibility = 0.0;
  ShiftMethod method = ShiftMethod::arg_ratio;
};

// Fringe minimum location. Throws Error(kAmbiguousMinimum) when the scan has
// several distinct minima within 1e-12 of each other.
ShiftResult phase_shift(const InterferometerSetup& setup, FringeMode mode,
                        int n_grid = kDefaultFringePoints);

struct EpsilonScan {
  std::vector<double> grid;
  std::vector<double> abs_a2;
  std::vector<double> abs_a3;
  int crossings = 0;
  std::optional<double> epsilon_o;
};

// |A2| and |A3| against the pulse-area offset with v_x, l, L, delta taken
// from `setup`; epsilon_o is the first sign change of |A2| - |A3|, refined by
// bisection.
EpsilonScan epsilon_scan(const InterferometerSetup& setup, double eps_min,
                         double eps_max, int n_points);

// Same, but throws Error(kNoBracket) when |A2| - |A3| never changes sign.
EpsilonScan find_epsilon_o(const InterferometerSetup& setup, double eps_min,
                           double eps_max, int n_points = 101);

// Below this k_x l the shift is dominated by reflections and is reported
// without being usable as a regression value.
inline constexpr double kReflectionRegimeKxl = 6.0 * kPi;

struct ShiftSweepRow {
  double kx_l = 0.0;
  std::optional<double> delta_phi_direct;
  std::optional<double> delta_phi_exact;
  std::string error;
  bool non_regression = false;
};

std::vector<ShiftSweepRow> shift_sweep_kxl(double mass, double l, double L,
                                           double delta,
                                           std::span<const double> kxl_grid);

struct DopplerReport {
  std::array<double, 3> deltas{};
  std::array<double, 3> shifts{};
  double relative_spread = 0.0;
};

// Shift at setup.delta and setup.delta -+ offset; the offset defaults to the
// Doppler spread 2 v_x / L.
DopplerReport doppler_robustness(const InterferometerSetup& setup,
                                 FringeMode mode = FringeMode::quantum_mz,
                                 std::optional<double> offset = std::nullopt);

}  // namespace mzscatter
