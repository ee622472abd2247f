#pragma once

#include "mzscatter/physics.hpp"
#include "mzscatter/transfer_matrix.hpp"

namespace mzscatter {

// Single-laser amplitudes, each block indexed (incident channel, exit
// channel): t_l(g, e) is left incidence in g, transmitted in e.
struct ScatteringSet {
  Matrix2 t_l = Matrix2::Identity();
  Matrix2 t_r = Matrix2::Identity();
  Matrix2 r_l = Matrix2::Zero();
  Matrix2 r_r = Matrix2::Zero();

  // Left-incidence flux balance for incoming channel `in`; 1 when conserved.
  double left_flux(Channel in, const ChannelKinematics& kin) const;
  double right_flux(Channel in, const ChannelKinematics& kin) const;
};

struct ConversionDenominators {
  Complex f;  // t_ee^l t_gg^l - t_eg^l t_ge^l
  Complex F;  // T13 T31 - T11 T33
};

inline constexpr double kConversionFloor = 1e-300;

ConversionDenominators conversion_denominators(const TransferMatrix4& t,
                                               const ScatteringSet& s);

// Closed-form amplitudes from a transfer matrix. Throws
// Error(kSingularConversion) when |F| < 1e-300.
ScatteringSet amplitudes_from_transfer(const TransferMatrix4& t);

// Closed-form transfer matrix from the amplitudes. Throws
// Error(kSingularConversion) when |f| < 1e-300.
TransferMatrix4 transfer_from_amplitudes(const ScatteringSet& s);

// Max-norm residual of the four elementary boundary systems
// (left/right incidence x ground/excited) with T applied to the amplitudes.
double verify_elementary_systems(const TransferMatrix4& t,
                                 const ScatteringSet& s);

// Amplitudes of the same barrier with laser phase phi added: every g -> e
// amplitude gains e^{-i phi}, every e -> g amplitude e^{+i phi}.
ScatteringSet decorate_phase(const ScatteringSet& phase_free, double phi);

}  // namespace mzscatter
