#include "mzscatter/transfer_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "mzscatter/error.hpp"

namespace mzscatter {

namespace {

constexpr double kExtractionFloor = 1e-300;
const Complex kI(0.0, 1.0);

// Wavefunction (g, e, g', e') of a free region with derivatives scaled by
// 1 / k_x so that all four rows are commensurate.
Vector4 scaled_state(const Matrix4& basis, const Vector4& coefficients,
                     double k_x) {
  Vector4 state = basis * coefficients;
  state(2) /= k_x;
  state(3) /= k_x;
  return state;
}

void check_drive(const LaserDrive& drive, const ChannelKinematics& kin) {
  if (drive.omega() != kin.omega) {
    throw Error(ErrorKind::kInvalidArgument,
                "drive Rabi frequency differs from the kinematics");
  }
}

}  // namespace

Matrix4 free_matrix_M0(double x, const ChannelKinematics& kin) {
  const Complex k(kin.k_x, 0.0);
  const Complex q = kin.q_x;
  const Complex kp = std::exp(kI * k * x);
  const Complex km = std::exp(-kI * k * x);
  const Complex qp = std::exp(kI * q * x);
  const Complex qm = std::exp(-kI * q * x);

  Matrix4 m = Matrix4::Zero();
  m(0, 0) = kp;
  m(0, 1) = km;
  m(1, 2) = qp;
  m(1, 3) = qm;
  m(2, 0) = kI * k * kp;
  m(2, 1) = -kI * k * km;
  m(3, 2) = kI * q * qp;
  m(3, 3) = -kI * q * qm;
  return m;
}

Matrix4 barrier_matrix_Mb(double x, double phi, const ChannelKinematics& kin,
                          double origin) {
  if (kin.omega == 0.0) {
    throw Error(ErrorKind::kDegenerateBasis,
                "dressed basis is undefined for a vanishing Rabi frequency");
  }
  const Complex phase = std::exp(-kI * phi);
  const std::array<Complex, 4> wavenumber = {kin.k_plus, -kin.k_plus,
                                             kin.k_minus, -kin.k_minus};
  const std::array<double, 4> lambda = {kin.lambda_plus, kin.lambda_plus,
                                        kin.lambda_minus, kin.lambda_minus};
  Matrix4 m;
  for (int col = 0; col < 4; ++col) {
    const Complex wave = std::exp(kI * wavenumber[col] * (x - origin));
    const Complex excited = 2.0 * lambda[col] / kin.omega * phase;
    const Complex slope = kI * wavenumber[col];
    m(0, col) = wave;
    m(1, col) = excited * wave;
    m(2, col) = slope * wave;
    m(3, col) = slope * excited * wave;
  }
  return m;
}

TransferMatrix4 single_laser_transfer(double x1, double x2, double phi,
                                      const ChannelKinematics& kin) {
  if (!(x2 > x1)) {
    throw Error(ErrorKind::kInvalidArgument,
                "laser right edge must exceed the left edge");
  }
  TransferMatrix4 t;
  t.barrier = BarrierSpan{x1, x2, phi};
  if (kin.omega == 0.0) return t;

  const Inverse4 free_left = invert4(free_matrix_M0(x1, kin));
  const Inverse4 dressed_right = invert4(barrier_matrix_Mb(x2, phi, kin, x1));
  t.entries = free_left.inverse * barrier_matrix_Mb(x1, phi, kin, x1) *
              dressed_right.inverse * free_matrix_M0(x2, kin);
  t.condition = std::max(free_left.condition, dressed_right.condition);
  return t;
}

TransferMatrix4 apply_phase_factorization(const TransferMatrix4& phase_free,
                                          double phi) {
  const Complex up = std::exp(kI * phi);
  const Complex down = std::exp(-kI * phi);
  TransferMatrix4 t = phase_free;
  t.entries.topRightCorner<2, 2>() *= up;
  t.entries.bottomLeftCorner<2, 2>() *= down;
  if (t.barrier) t.barrier->phi = phase_free.barrier->phi + phi;
  return t;
}

TransferMatrix4 compose(const TransferMatrix4& left,
                        const TransferMatrix4& right) {
  TransferMatrix4 t;
  t.entries = left.entries * right.entries;
  t.composed = true;
  t.condition = std::max(left.condition, right.condition);
  return t;
}

std::array<TransferMatrix4, 3> laser_transfers(const LaserGeometry& geom,
                                               const LaserDrive& drive,
                                               const ChannelKinematics& kin) {
  check_drive(drive, kin);
  std::array<TransferMatrix4, 3> lasers;
  for (int n = 0; n < 3; ++n) {
    lasers[n] = single_laser_transfer(geom.left_edge(n), geom.right_edge(n),
                                      drive.phase(n), kin);
  }
  return lasers;
}

TransferMatrix4 compose_interferometer(const LaserGeometry& geom,
                                       const LaserDrive& drive,
                                       const ChannelKinematics& kin) {
  const auto lasers = laser_transfers(geom, drive, kin);
  return compose(compose(lasers[0], lasers[1]), lasers[2]);
}

Complex extract_transmission(const TransferMatrix4& total) {
  const Complex denominator = total(1, 3) * total(3, 1) - total(1, 1) * total(3, 3);
  if (!(std::abs(denominator) >= kExtractionFloor)) {
    throw Error(ErrorKind::kSingularExtraction,
                "T13 T31 - T11 T33 vanishes; no transmitted solution");
  }
  return total(3, 1) / denominator;
}

double quantum_probability(Complex transmission_ge,
                           const ChannelKinematics& kin) {
  return kin.excited_flux_weight() * std::norm(transmission_ge);
}

double excited_transmission_probability(double mass, double k_x,
                                        const LaserGeometry& geom,
                                        const LaserDrive& drive,
                                        double delta) {
  ChannelKinematics kin;
  try {
    kin = channel_kinematics(mass, k_x, drive.omega(), delta);
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::kClosedChannel) return 0.0;
    throw;
  }
  const TransferMatrix4 total = compose_interferometer(geom, drive, kin);
  return quantum_probability(extract_transmission(total), kin);
}

double ScatteringSolution::total_flux(const ChannelKinematics& kin) const {
  const double w = kin.excited_flux_weight();
  return std::norm(transmission_gg) + w * std::norm(transmission_ge) +
         std::norm(reflection_gg) + w * std::norm(reflection_ge);
}

ScatteringSolution solve_left_ground_incidence(const LaserGeometry& geom,
                                               const LaserDrive& drive,
                                               const ChannelKinematics& kin) {
  const auto lasers = laser_transfers(geom, drive, kin);
  const TransferMatrix4 total =
      compose(compose(lasers[0], lasers[1]), lasers[2]);

  const Complex F = total(1, 3) * total(3, 1) - total(1, 1) * total(3, 3);
  if (!(std::abs(F) >= kExtractionFloor)) {
    throw Error(ErrorKind::kSingularExtraction,
                "composed transfer matrix admits no transmitted solution");
  }

  ScatteringSolution sol;
  sol.transmission_gg = -total(3, 3) / F;
  sol.transmission_ge = total(3, 1) / F;
  sol.free_regions[3] =
      AmplitudeVector4(sol.transmission_gg, 0.0, sol.transmission_ge, 0.0);
  for (int n = 2; n >= 0; --n) {
    sol.free_regions[n] = lasers[n].entries * sol.free_regions[n + 1];
  }
  sol.reflection_gg = sol.free_regions[0](1);
  sol.reflection_ge = sol.free_regions[0](3);

  for (int n = 0; n < 3; ++n) {
    if (kin.omega == 0.0) {
      sol.barrier_regions[n] = sol.free_regions[n + 1];
      continue;
    }
    // Inside laser n, matched to the free region on its right edge.
    const double x_end = geom.right_edge(n);
    const Inverse4 dressed = invert4(
        barrier_matrix_Mb(x_end, drive.phase(n), kin, geom.left_edge(n)));
    sol.barrier_regions[n] =
        dressed.inverse * free_matrix_M0(x_end, kin) * sol.free_regions[n + 1];
  }
  return sol;
}

double matching_residual(const ScatteringSolution& solution,
                         const LaserGeometry& geom, const LaserDrive& drive,
                         const ChannelKinematics& kin) {
  check_drive(drive, kin);
  double worst = 0.0;
  for (int n = 0; n < 3; ++n) {
    for (int side = 0; side < 2; ++side) {
      const double x = side == 0 ? geom.left_edge(n) : geom.right_edge(n);
      const AmplitudeVector4& outside =
          solution.free_regions[side == 0 ? n : n + 1];
      const Vector4 free_state =
          scaled_state(free_matrix_M0(x, kin), outside, kin.k_x);
      const Vector4 inner_state =
          kin.omega == 0.0
              ? scaled_state(free_matrix_M0(x, kin),
                             solution.barrier_regions[n], kin.k_x)
              : scaled_state(barrier_matrix_Mb(x, drive.phase(n), kin,
                                               geom.left_edge(n)),
                             solution.barrier_regions[n], kin.k_x);
      const double scale =
          std::max({free_state.norm(), inner_state.norm(), 1e-300});
      worst = std::max(worst, (free_state - inner_state).norm() / scale);
    }
  }
  return worst;
}

}  // namespace mzscatter
