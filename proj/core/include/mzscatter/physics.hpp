#pragma once

#include <array>
#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace mzscatter {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;

inline constexpr double kHbar = 1.0545718e-34;       // J s
inline constexpr double kSodiumMass = 3.82e-26;      // kg
inline constexpr double kPi = std::numbers::pi;

// Internal state index used for every 2x2 block in the library.
enum class Channel : int { g = 0, e = 1 };

constexpr int index(Channel c) { return static_cast<int>(c); }

// Wraps an angle into (-pi, pi].
double wrap_phase(double angle);

// Square root on the branch with Im >= 0 (and Re > 0 when the result is
// real), so that evanescent components decay along +x.
Complex branch_sqrt(Complex z);

struct AtomSpec {
  double mass = kSodiumMass;  // kg
  double k_x = 0.0;           // rad/m, longitudinal
  double k_y = 0.0;           // rad/m
  double k_z = 0.0;           // rad/m, carried only; evolves freely
  double k_L = 0.0;           // rad/m, laser wavenumber
  double delta0 = 0.0;        // rad/s, omega_L - omega_ge

  // Throws Error(kInvalidArgument) unless mass > 0, k_x > 0, all finite.
  void validate() const;
};

// pi/2 - pi - pi/2 layout: widths l/2, l, l/2 separated by free flights L.
class LaserGeometry {
 public:
  LaserGeometry(double l, double L);

  double l() const { return l_; }
  double L() const { return L_; }

  // x1..x6: left and right edge of each of the three lasers.
  const std::array<double, 6>& edges() const { return edges_; }
  double left_edge(int laser) const { return edges_[2 * laser]; }
  double right_edge(int laser) const { return edges_[2 * laser + 1]; }

 private:
  double l_;
  double L_;
  std::array<double, 6> edges_;
};

class LaserDrive {
 public:
  LaserDrive(double omega, std::array<double, 3> phases = {0.0, 0.0, 0.0});

  double omega() const { return omega_; }
  const std::array<double, 3>& phases() const { return phases_; }
  double phase(int laser) const { return phases_[laser]; }

  // Phi = phi1 - 2 phi2 + phi3 (not wrapped).
  double composite_phase() const;

 private:
  double omega_;
  std::array<double, 3> phases_;
};

struct ChannelKinematics {
  double mass = 0.0;
  double delta = 0.0;         // effective detuning
  double omega = 0.0;         // Rabi frequency
  double omega_prime = 0.0;   // sqrt(omega^2 + delta^2)
  double k_x = 0.0;
  Complex q_x;
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  Complex k_plus;
  Complex k_minus;

  // Flux weight q_x / k_x of the excited channel.
  double excited_flux_weight() const { return q_x.real() / k_x; }
  // v_x = hbar k_x / m.
  double velocity() const { return kHbar * k_x / mass; }
};

// Delta = Delta0 - hbar k_L^2 / (2m) - hbar k_y k_L / m.
double effective_detuning(const AtomSpec& atom);

// Critical detuning -hbar k_x^2 / (2m); the excited channel is closed at or
// below it.
double critical_detuning(double mass, double k_x);

// Throws Error(kClosedChannel) when delta <= critical_detuning(mass, k_x).
ChannelKinematics channel_kinematics(double mass, double k_x, double omega,
                                     double delta);
ChannelKinematics channel_kinematics(const AtomSpec& atom,
                                     const LaserDrive& drive, double delta);

// <i| exp(-i H_n t / hbar) |j> for i, j in {g, e}, with
// H_n = -hbar delta |e><e| + (hbar omega / 2)(e^{-i phi} sigma_+ + h.c.).
Matrix2 rabi_matrix_elements(double delta, double omega, double t, double phi);

// exp(-i H_B t / hbar) with H_B = -hbar delta |e><e|.
Matrix2 free_evolution(double delta, double t);

}  // namespace mzscatter
