#include "mzscatter/channel_scattering.hpp"

#include <algorithm>
#include <cmath>

#include "mzscatter/error.hpp"

namespace mzscatter {

namespace {

constexpr int g = index(Channel::g);
constexpr int e = index(Channel::e);

double channel_weight(Channel c, const ChannelKinematics& kin) {
  return c == Channel::g ? 1.0 : kin.excited_flux_weight();
}

double flux(const Matrix2& t, const Matrix2& r, Channel in,
            const ChannelKinematics& kin) {
  const int i = index(in);
  double out = 0.0;
  for (Channel c : {Channel::g, Channel::e}) {
    const int j = index(c);
    out += channel_weight(c, kin) * (std::norm(t(i, j)) + std::norm(r(i, j)));
  }
  return out / channel_weight(in, kin);
}

}  // namespace

double ScatteringSet::left_flux(Channel in, const ChannelKinematics& kin) const {
  return flux(t_l, r_l, in, kin);
}

double ScatteringSet::right_flux(Channel in,
                                 const ChannelKinematics& kin) const {
  return flux(t_r, r_r, in, kin);
}

ConversionDenominators conversion_denominators(const TransferMatrix4& t,
                                               const ScatteringSet& s) {
  return {s.t_l(e, e) * s.t_l(g, g) - s.t_l(e, g) * s.t_l(g, e),
          t(1, 3) * t(3, 1) - t(1, 1) * t(3, 3)};
}

ScatteringSet amplitudes_from_transfer(const TransferMatrix4& t) {
  const auto T = [&](int i, int j) { return t(i, j); };
  const Complex F = T(1, 3) * T(3, 1) - T(1, 1) * T(3, 3);
  if (!(std::abs(F) >= kConversionFloor)) {
    throw Error(ErrorKind::kSingularConversion,
                "F = T13 T31 - T11 T33 vanishes");
  }

  ScatteringSet s;
  s.r_l(g, g) = -(-T(2, 3) * T(3, 1) + T(2, 1) * T(3, 3)) / F;
  s.r_l(g, e) = (-T(3, 3) * T(4, 1) + T(3, 1) * T(4, 3)) / F;
  s.r_l(e, g) = -(-T(1, 3) * T(2, 1) + T(1, 1) * T(2, 3)) / F;
  s.r_l(e, e) = -(-T(1, 3) * T(4, 1) + T(1, 1) * T(4, 3)) / F;
  s.r_r(g, g) = (-T(1, 3) * T(3, 2) + T(1, 2) * T(3, 3)) / F;
  s.r_r(g, e) = -(T(1, 2) * T(3, 1) - T(1, 1) * T(3, 2)) / F;
  s.r_r(e, g) = (T(1, 4) * T(3, 3) - T(1, 3) * T(3, 4)) / F;
  s.r_r(e, e) = -(T(1, 4) * T(3, 1) - T(1, 1) * T(3, 4)) / F;
  s.t_l(g, g) = -T(3, 3) / F;
  s.t_l(g, e) = T(3, 1) / F;
  s.t_l(e, g) = T(1, 3) / F;
  s.t_l(e, e) = -T(1, 1) / F;

  s.t_r(g, g) = -(-T(1, 3) * T(2, 2) * T(3, 1) + T(1, 2) * T(2, 3) * T(3, 1) +
                  T(1, 3) * T(2, 1) * T(3, 2) - T(1, 1) * T(2, 3) * T(3, 2) -
                  T(1, 2) * T(2, 1) * T(3, 3) + T(1, 1) * T(2, 2) * T(3, 3)) /
                F;
  s.t_r(g, e) = -(T(1, 3) * T(3, 2) * T(4, 1) - T(1, 2) * T(3, 3) * T(4, 1) -
                  T(1, 3) * T(3, 1) * T(4, 2) + T(1, 1) * T(3, 3) * T(4, 2) +
                  T(1, 2) * T(3, 1) * T(4, 3) - T(1, 1) * T(3, 2) * T(4, 3)) /
                F;
  s.t_r(e, g) = -(T(1, 4) * T(2, 3) * T(3, 1) - T(1, 3) * T(2, 4) * T(3, 1) -
                  T(1, 4) * T(2, 1) * T(3, 3) + T(1, 1) * T(2, 4) * T(3, 3) +
                  T(1, 3) * T(2, 1) * T(3, 4) - T(1, 1) * T(2, 3) * T(3, 4)) /
                F;
  s.t_r(e, e) = -(-T(1, 4) * T(3, 3) * T(4, 1) + T(1, 3) * T(3, 4) * T(4, 1) +
                  T(1, 4) * T(3, 1) * T(4, 3) - T(1, 1) * T(3, 4) * T(4, 3) -
                  T(1, 3) * T(3, 1) * T(4, 4) + T(1, 1) * T(3, 3) * T(4, 4)) /
                F;
  return s;
}

TransferMatrix4 transfer_from_amplitudes(const ScatteringSet& s) {
  const Complex tgg = s.t_l(g, g), tge = s.t_l(g, e);
  const Complex teg = s.t_l(e, g), tee = s.t_l(e, e);
  const Complex rgg = s.r_l(g, g), rge = s.r_l(g, e);
  const Complex reg = s.r_l(e, g), ree = s.r_l(e, e);
  const Complex Rgg = s.r_r(g, g), Rge = s.r_r(g, e);
  const Complex Reg = s.r_r(e, g), Ree = s.r_r(e, e);

  const Complex f = tee * tgg - teg * tge;
  if (!(std::abs(f) >= kConversionFloor)) {
    throw Error(ErrorKind::kSingularConversion,
                "f = t_ee t_gg - t_eg t_ge vanishes");
  }

  TransferMatrix4 t;
  Matrix4& T = t.entries;
  T(0, 0) = tee / f;
  T(0, 1) = (Rge * teg - Rgg * tee) / f;
  T(0, 2) = -teg / f;
  T(0, 3) = (Ree * teg - Reg * tee) / f;
  T(1, 0) = (rgg * tee - reg * tge) / f;
  T(1, 1) = s.t_r(g, g) -
            (rgg * Rgg * tee - rgg * Rge * teg - reg * Rgg * tge +
             reg * Rge * tgg) / f;
  T(1, 2) = (reg * tgg - rgg * teg) / f;
  T(1, 3) = s.t_r(e, g) -
            (rgg * Reg * tee - rgg * Ree * teg - reg * Reg * tge +
             reg * Ree * tgg) / f;
  T(2, 0) = -tge / f;
  T(2, 1) = (Rgg * tge - Rge * tgg) / f;
  T(2, 2) = tgg / f;
  T(2, 3) = (Reg * tge - Ree * tgg) / f;
  T(3, 0) = (rge * tee - ree * tge) / f;
  T(3, 1) = s.t_r(g, e) -
            (rge * Rgg * tee - rge * Rge * teg - ree * Rgg * tge +
             ree * Rge * tgg) / f;
  T(3, 2) = (ree * tgg - rge * teg) / f;
  T(3, 3) = s.t_r(e, e) -
            (rge * Reg * tee - rge * Ree * teg - ree * Reg * tge +
             ree * Ree * tgg) / f;
  return t;
}

double verify_elementary_systems(const TransferMatrix4& t,
                                 const ScatteringSet& s) {
  const Matrix4& T = t.entries;
  double worst = 0.0;
  const auto check = [&](const Vector4& left, const Vector4& right) {
    worst = std::max(worst, (left - T * right).cwiseAbs().maxCoeff());
  };
  // Left incidence: (1|0, r_ig, 0|1, r_ie) = T (t_ig, 0, t_ie, 0).
  for (int i : {g, e}) {
    const Vector4 left(i == g ? 1.0 : 0.0, s.r_l(i, g), i == e ? 1.0 : 0.0,
                       s.r_l(i, e));
    const Vector4 right(s.t_l(i, g), 0.0, s.t_l(i, e), 0.0);
    check(left, right);
  }
  // Right incidence: (0, t_ig, 0, t_ie) = T (r_ig, 1|0, r_ie, 0|1).
  for (int i : {g, e}) {
    const Vector4 left(0.0, s.t_r(i, g), 0.0, s.t_r(i, e));
    const Vector4 right(s.r_r(i, g), i == g ? 1.0 : 0.0, s.r_r(i, e),
                        i == e ? 1.0 : 0.0);
    check(left, right);
  }
  return worst;
}

ScatteringSet decorate_phase(const ScatteringSet& phase_free, double phi) {
  const Complex absorb = std::exp(Complex(0.0, -phi));
  const Complex emit = std::exp(Complex(0.0, phi));
  ScatteringSet s = phase_free;
  for (Matrix2* block : {&s.t_l, &s.t_r, &s.r_l, &s.r_r}) {
    (*block)(g, e) *= absorb;
    (*block)(e, g) *= emit;
  }
  return s;
}

}  // namespace mzscatter
