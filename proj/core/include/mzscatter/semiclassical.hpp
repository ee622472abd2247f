#pragma once

#include <array>

#include "mzscatter/physics.hpp"

namespace mzscatter {

// Classical-trajectory model: internal state evolves in time while the atom
// flies through the lasers at v_x.
struct SemiclassicalInput {
  double omega = 0.0;   // Rabi frequency
  double delta = 0.0;   // detuning
  double tau = 0.0;     // l / v_x, transit time of the full-width (pi) laser
  double t_free = 0.0;  // L / v_x
  std::array<double, 3> phases{0.0, 0.0, 0.0};

  double composite_phase() const {
    return phases[0] - 2.0 * phases[1] + phases[2];
  }
  void validate() const;
};

// Amplitudes of the four reflectionless g -> e paths.
struct SclPathSet {
  Complex a1;  // excited after laser 1, stays excited
  Complex a2;  // excited at 1, de-excited at 2, excited at 3
  Complex a3;  // ground through 1, excited at 2, stays excited
  Complex a4;  // ground until laser 3
};

SclPathSet scl_path_amplitudes(const SemiclassicalInput& in);

// |a2 + a3|^2 from the operator products.
double scl_probability(const SemiclassicalInput& in);

// Closed form of the same probability in terms of Phi only.
double scl_probability_closed_form(double omega, double delta, double tau,
                                   double composite_phase);

}  // namespace mzscatter
