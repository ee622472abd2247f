#include "mzscatter/semiclassical.hpp"

#include <cmath>

#include "mzscatter/error.hpp"

namespace mzscatter {

namespace {

constexpr int g = index(Channel::g);
constexpr int e = index(Channel::e);

}  // namespace

void SemiclassicalInput::validate() const {
  if (!std::isfinite(omega) || !std::isfinite(delta) || omega < 0.0) {
    throw Error(ErrorKind::kInvalidArgument,
                "semiclassical omega must be finite and >= 0");
  }
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw Error(ErrorKind::kInvalidArgument, "transit time tau must be > 0");
  }
  if (!(t_free >= 0.0) || !std::isfinite(t_free)) {
    throw Error(ErrorKind::kInvalidArgument, "free flight time must be >= 0");
  }
}

SclPathSet scl_path_amplitudes(const SemiclassicalInput& in) {
  in.validate();
  const Matrix2 u1 = rabi_matrix_elements(in.delta, in.omega, 0.5 * in.tau,
                                          in.phases[0]);
  const Matrix2 u2 =
      rabi_matrix_elements(in.delta, in.omega, in.tau, in.phases[1]);
  const Matrix2 u3 = rabi_matrix_elements(in.delta, in.omega, 0.5 * in.tau,
                                          in.phases[2]);
  const Matrix2 flight = free_evolution(in.delta, in.t_free);

  // Each factor <i| U_n U_B |j> is laser n preceded by the free flight.
  const Matrix2 stage2 = u2 * flight;
  const Matrix2 stage3 = u3 * flight;

  SclPathSet paths;
  paths.a1 = stage3(e, e) * stage2(e, e) * u1(e, g);
  paths.a2 = stage3(e, g) * stage2(g, e) * u1(e, g);
  paths.a3 = stage3(e, e) * stage2(e, g) * u1(g, g);
  paths.a4 = stage3(e, g) * stage2(g, g) * u1(g, g);
  return paths;
}

double scl_probability(const SemiclassicalInput& in) {
  const SclPathSet paths = scl_path_amplitudes(in);
  return std::norm(paths.a2 + paths.a3);
}

double scl_probability_closed_form(double omega, double delta, double tau,
                                   double composite_phase) {
  const double op2 = omega * omega + delta * delta;
  if (op2 == 0.0) return 0.0;
  const double op = std::sqrt(op2);
  const double w2 = omega * omega;
  const double w4 = w2 * w2;
  const double d2 = delta * delta;
  const double half = std::sin(0.5 * op * tau);
  const double quarter = std::sin(0.25 * op * tau);
  const double cos_half = std::cos(0.5 * op * tau);

  const double bracket =
      4.0 * d2 * cos_half + w2 * std::cos(op * tau) -
      4.0 * (d2 + op2 + w2 * cos_half) * quarter * quarter *
          std::cos(composite_phase);
  const double braces = 4.0 * d2 * op2 + 3.0 * w4 + w2 * bracket;
  return w2 / (4.0 * op2 * op2 * op2) * half * half * braces;
}

}  // namespace mzscatter
