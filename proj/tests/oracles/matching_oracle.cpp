#include "matching_oracle.hpp"

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace mzscatter::oracle {

namespace {

constexpr double kHbar = 1.0545718e-34;
const cplx kI(0.0, 1.0);

struct Mode {
  cplx kappa;
  Eigen::Vector2cd internal;
  double origin;
};

cplx upper_sqrt(cplx z) {
  cplx s = std::sqrt(z);
  if (s.imag() < 0.0 || (s.imag() == 0.0 && s.real() < 0.0)) s = -s;
  return s;
}

// (psi_g, psi_e, psi_g' / k, psi_e' / k) of a unit-amplitude mode at x.
Eigen::Vector4cd trace(const Mode& m, double x, double k) {
  const cplx wave = std::exp(kI * m.kappa * (x - m.origin));
  Eigen::Vector4cd v;
  v << m.internal(0) * wave, m.internal(1) * wave,
      kI * m.kappa * m.internal(0) * wave / k,
      kI * m.kappa * m.internal(1) * wave / k;
  return v;
}

std::vector<Mode> free_modes(double k, cplx q) {
  const Eigen::Vector2cd g(1.0, 0.0);
  const Eigen::Vector2cd e(0.0, 1.0);
  return {{k, g, 0.0}, {-k, g, 0.0}, {q, e, 0.0}, {-q, e, 0.0}};
}

std::vector<Mode> laser_modes(const MatchingInput& in, double phi,
                              double origin) {
  Eigen::Matrix2cd h;
  h << 0.0, 0.5 * in.omega * std::exp(kI * phi),
      0.5 * in.omega * std::exp(-kI * phi), -in.delta;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(h);
  std::vector<Mode> modes;
  for (int j = 0; j < 2; ++j) {
    const double mu = solver.eigenvalues()(j);
    const cplx kappa =
        upper_sqrt(cplx(in.k_x * in.k_x - 2.0 * in.mass * mu / kHbar, 0.0));
    const Eigen::Vector2cd v = solver.eigenvectors().col(j);
    modes.push_back({kappa, v, origin});
    modes.push_back({-kappa, v, origin});
  }
  return modes;
}

}  // namespace

MatchingResult solve_by_matching(const MatchingInput& in) {
  if (!(in.omega > 0.0)) {
    throw std::invalid_argument("matching oracle needs a nonzero coupling");
  }
  const double k = in.k_x;
  const cplx q =
      upper_sqrt(cplx(k * k + 2.0 * in.mass * in.delta / kHbar, 0.0));
  if (q.imag() != 0.0) throw std::invalid_argument("closed excited channel");

  const double l = in.l;
  const double L = in.L;
  const std::array<double, 6> edges = {0.0,           l / 2.0,
                                       L + l / 2.0,   L + 1.5 * l,
                                       2 * L + 1.5 * l, 2 * L + 2.0 * l};

  // Seven regions: free, laser, free, laser, free, laser, free.
  std::array<std::vector<Mode>, 7> regions;
  for (int r = 0; r < 7; ++r) {
    regions[r] = r % 2 == 0 ? free_modes(k, q)
                            : laser_modes(in, in.phases[r / 2], edges[r - 1]);
  }
  // Unknown columns per region; the outer regions only carry outgoing waves.
  const std::array<std::vector<int>, 7> active = {
      std::vector<int>{1, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3},
      {0, 1, 2, 3},           {0, 1, 2, 3}, {0, 2}};
  std::array<int, 7> offset{};
  for (int r = 1; r < 7; ++r) {
    offset[r] = offset[r - 1] + static_cast<int>(active[r - 1].size());
  }

  Eigen::Matrix<cplx, 24, 24> a = Eigen::Matrix<cplx, 24, 24>::Zero();
  Eigen::Matrix<cplx, 24, 1> b = Eigen::Matrix<cplx, 24, 1>::Zero();
  for (int edge = 0; edge < 6; ++edge) {
    const double x = edges[edge];
    for (int side = 0; side < 2; ++side) {
      const int r = edge + side;
      const double sign = side == 0 ? 1.0 : -1.0;
      for (std::size_t c = 0; c < active[r].size(); ++c) {
        a.block<4, 1>(4 * edge, offset[r] + static_cast<int>(c)) =
            sign * trace(regions[r][active[r][c]], x, k);
      }
    }
    if (edge == 0) b.segment<4>(0) = -trace(regions[0][0], x, k);
  }

  const Eigen::Matrix<cplx, 24, 1> sol = a.fullPivLu().solve(b);
  MatchingResult out;
  out.r_gg = sol(0);
  out.r_ge = sol(1);
  out.t_gg = sol(22);
  out.t_ge = sol(23);
  out.q_over_k = q.real() / k;
  return out;
}

}  // namespace mzscatter::oracle
