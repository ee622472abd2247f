#pragma once

#include <array>
#include <optional>

#include "mzscatter/matrix4.hpp"
#include "mzscatter/physics.hpp"

namespace mzscatter {

// Plane-wave coefficients (G+, G-, E+, E-) multiplying e^{+-i k_x x}|g> and
// e^{+-i q_x x}|e>, with x the absolute coordinate.
using AmplitudeVector4 = Vector4;

struct BarrierSpan {
  double x_start = 0.0;
  double x_end = 0.0;
  double phi = 0.0;
};

// v_left = T v_right.
struct TransferMatrix4 {
  Matrix4 entries = Matrix4::Identity();
  std::optional<BarrierSpan> barrier;  // present for a single laser
  bool composed = false;
  double condition = 1.0;  // worst condition number met while building

  // 1-based access matching the usual T_ij notation.
  Complex operator()(int i, int j) const { return entries(i - 1, j - 1); }

  bool ill_conditioned() const { return condition > kConditionWarning; }
};

struct QuantumFringePoint {
  double composite_phase = 0.0;
  Complex transmission_ge;
  double probability = 0.0;
};

// Rows (g, e, g', e') of the free solution at x; columns (G+, G-, E+, E-).
Matrix4 free_matrix_M0(double x, const ChannelKinematics& kin);

// Rows (g, e, g', e') of the dressed-state solution inside a laser with phase
// phi; columns (a, b, c, d) for e^{+-i k_+ (x - origin)}|l+> and
// e^{+-i k_- (x - origin)}|l->.
// Throws Error(kDegenerateBasis) when kin.omega == 0.
Matrix4 barrier_matrix_Mb(double x, double phi, const ChannelKinematics& kin,
                          double origin = 0.0);

// M0(x1)^-1 Mb(x1, phi) Mb(x2, phi)^-1 M0(x2); identity for omega == 0.
// The dressed product is formed from the width x2 - x1 alone, so evanescent
// dressed states stay finite far from the origin.
TransferMatrix4 single_laser_transfer(double x1, double x2, double phi,
                                      const ChannelKinematics& kin);

// Decorates a phi = 0 matrix: columns/rows of the excited amplitudes pick
// up e^{+i phi} in the upper-right block and e^{-i phi} in the lower-left.
TransferMatrix4 apply_phase_factorization(const TransferMatrix4& phase_free,
                                          double phi);

// Ordered product left * right.
TransferMatrix4 compose(const TransferMatrix4& left,
                        const TransferMatrix4& right);

// The three lasers in order, each at its edges with its own phase. The
// drive's Rabi frequency must equal kin.omega.
std::array<TransferMatrix4, 3> laser_transfers(const LaserGeometry& geom,
                                               const LaserDrive& drive,
                                               const ChannelKinematics& kin);
TransferMatrix4 compose_interferometer(const LaserGeometry& geom,
                                       const LaserDrive& drive,
                                       const ChannelKinematics& kin);

// T_ge^l = T31 / (T13 T31 - T11 T33). Throws Error(kSingularExtraction) when
// the denominator magnitude is below 1e-300.
Complex extract_transmission(const TransferMatrix4& total);

// (q_x / k_x) |T_ge|^2.
double quantum_probability(Complex transmission_ge,
                           const ChannelKinematics& kin);

// Probability at the reporting boundary: zero when the excited channel is
// closed, otherwise the flux-weighted transmission through all three lasers.
double excited_transmission_probability(double mass, double k_x,
                                        const LaserGeometry& geom,
                                        const LaserDrive& drive, double delta);

// Full stationary solution for a ground-state wave incident from the left.
struct ScatteringSolution {
  // Free regions I, III, V, VII (left of laser 1 ... right of laser 3).
  std::array<AmplitudeVector4, 4> free_regions;
  // Dressed-basis coefficients inside lasers 1..3, with plane waves
  // referenced to each laser's left edge.
  std::array<AmplitudeVector4, 3> barrier_regions;
  Complex reflection_gg;
  Complex reflection_ge;
  Complex transmission_gg;
  Complex transmission_ge;

  // |T_gg|^2 + w |T_ge|^2 + |R_gg|^2 + w |R_ge|^2 with w = q_x / k_x.
  double total_flux(const ChannelKinematics& kin) const;
};

ScatteringSolution solve_left_ground_incidence(const LaserGeometry& geom,
                                               const LaserDrive& drive,
                                               const ChannelKinematics& kin);

// Largest relative mismatch of (g, e, g'/k_x, e'/k_x) across the six laser
// edges for the piecewise wavefunction of `solution`.
double matching_residual(const ScatteringSolution& solution,
                         const LaserGeometry& geom, const LaserDrive& drive,
                         const ChannelKinematics& kin);

}  // namespace mzscatter
