#include "mzscatter/physics.hpp"

#include <cmath>
#include <string>

#include "mzscatter/error.hpp"

namespace mzscatter {

namespace {

bool all_finite(std::initializer_list<double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace

double wrap_phase(double angle) {
  double wrapped = std::remainder(angle, 2.0 * kPi);  // [-pi, pi]
  if (wrapped <= -kPi) wrapped += 2.0 * kPi;
  return wrapped;
}

Complex branch_sqrt(Complex z) {
  Complex root = std::sqrt(z);
  if (root.imag() < 0.0 || (root.imag() == 0.0 && root.real() < 0.0)) {
    root = -root;
  }
  return root;
}

void AtomSpec::validate() const {
  if (!all_finite({mass, k_x, k_y, k_z, k_L, delta0})) {
    throw Error(ErrorKind::kInvalidArgument, "AtomSpec fields must be finite");
  }
  if (!(mass > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "AtomSpec mass must be positive");
  }
  if (!(k_x > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "AtomSpec k_x must be positive");
  }
}

LaserGeometry::LaserGeometry(double l, double L) : l_(l), L_(L) {
  if (!all_finite({l, L}) || !(l > 0.0) || !(L > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                "laser geometry needs finite l > 0 and L > 0");
  }
  edges_ = {0.0,           0.5 * l,           L + 0.5 * l,
            L + 1.5 * l,   2.0 * L + 1.5 * l, 2.0 * L + 2.0 * l};
}

LaserDrive::LaserDrive(double omega, std::array<double, 3> phases)
    : omega_(omega) {
  if (!std::isfinite(omega) || omega < 0.0) {
    throw Error(ErrorKind::kInvalidArgument,
                "Rabi frequency must be finite and non-negative");
  }
  for (std::size_t n = 0; n < phases.size(); ++n) {
    if (!std::isfinite(phases[n])) {
      throw Error(ErrorKind::kInvalidArgument, "laser phases must be finite");
    }
    phases_[n] = wrap_phase(phases[n]);
  }
}

double LaserDrive::composite_phase() const {
  return phases_[0] - 2.0 * phases_[1] + phases_[2];
}

double effective_detuning(const AtomSpec& atom) {
  atom.validate();
  const double recoil = kHbar * atom.k_L * atom.k_L / (2.0 * atom.mass);
  const double doppler = kHbar * atom.k_y * atom.k_L / atom.mass;
  return atom.delta0 - recoil - doppler;
}

double critical_detuning(double mass, double k_x) {
  return -kHbar * k_x * k_x / (2.0 * mass);
}

ChannelKinematics channel_kinematics(double mass, double k_x, double omega,
                                     double delta) {
  if (!all_finite({mass, k_x, omega, delta}) || !(mass > 0.0) ||
      !(k_x > 0.0) || omega < 0.0) {
    throw Error(ErrorKind::kInvalidArgument,
                "kinematics need finite mass > 0, k_x > 0, omega >= 0");
  }
  if (delta <= critical_detuning(mass, k_x)) {
    throw Error(ErrorKind::kClosedChannel,
                "detuning " + std::to_string(delta) +
                    " rad/s is at or below the critical value " +
                    std::to_string(critical_detuning(mass, k_x)));
  }

  ChannelKinematics kin;
  kin.mass = mass;
  kin.delta = delta;
  kin.omega = omega;
  kin.omega_prime = std::hypot(omega, delta);
  kin.k_x = k_x;

  const double scale = 2.0 * mass / kHbar;
  const double k2 = k_x * k_x;
  kin.q_x = branch_sqrt(Complex(k2 + scale * delta, 0.0));
  kin.lambda_plus = 0.5 * (-delta + kin.omega_prime);
  kin.lambda_minus = 0.5 * (-delta - kin.omega_prime);
  kin.k_plus = branch_sqrt(Complex(k2 - scale * kin.lambda_plus, 0.0));
  kin.k_minus = branch_sqrt(Complex(k2 - scale * kin.lambda_minus, 0.0));
  return kin;
}

ChannelKinematics channel_kinematics(const AtomSpec& atom,
                                     const LaserDrive& drive, double delta) {
  atom.validate();
  return channel_kinematics(atom.mass, atom.k_x, drive.omega(), delta);
}

Matrix2 rabi_matrix_elements(double delta, double omega, double t,
                             double phi) {
  if (!(t >= 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "evolution time must be >= 0");
  }
  const double omega_prime = std::hypot(omega, delta);
  const double half_angle = 0.5 * omega_prime * t;
  const double c = std::cos(half_angle);
  // (x / omega') sin(omega' t / 2), finite as omega' -> 0.
  const auto ratio_sin = [&](double x) {
    if (omega_prime == 0.0) return 0.0;
    return x / omega_prime * std::sin(half_angle);
  };
  const Complex i(0.0, 1.0);
  const Complex global = std::exp(i * (0.5 * delta * t));

  Matrix2 u;
  u(0, 0) = global * (c - i * ratio_sin(delta));
  u(1, 1) = global * (c + i * ratio_sin(delta));
  u(1, 0) = -i * global * std::exp(-i * phi) * ratio_sin(omega);
  u(0, 1) = -i * global * std::exp(i * phi) * ratio_sin(omega);
  return u;
}

Matrix2 free_evolution(double delta, double t) {
  Matrix2 u = Matrix2::Zero();
  u(0, 0) = 1.0;
  u(1, 1) = std::exp(Complex(0.0, delta * t));
  return u;
}

}  // namespace mzscatter
