#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string_view>

#include "mzscatter/channel_scattering.hpp"

namespace mzscatter {

enum class AmplitudeKind { transmission, reflection };
enum class Incidence { left, right };

// One single-laser amplitude in a path product, e.g. (r_2)^l_{gg}.
struct PathFactor {
  int laser;  // 1..3
  AmplitudeKind kind;
  Incidence side;
  Channel in;
  Channel out;
};

struct PathSpec {
  std::string_view label;
  int eta_order;  // 0 for A2, A3; 1 for A1, A4; 2 for the B paths
  std::span<const PathFactor> factors;

  int reflection_count() const;
};

// A1..A4: the reflectionless g -> e paths.
std::span<const PathSpec> direct_path_table();
// B1..B22: two-reflection paths with the second laser flipping the state.
std::span<const PathSpec> reflection_path_table();
// B23, B24: the two remaining second-laser-flipping, two-reflection paths
// (reflection between lasers 2 and 3 ending with (r_2)^r_{eg}); absent from
// the 22-entry table but required for the two-reflection order to close.
std::span<const PathSpec> supplementary_path_table();

struct PathAmplitude {
  std::string_view label;
  Complex value;
  int eta_order = 0;
  int reflections = 0;
};

// Built from phase-free (all phi_n = 0) single-laser amplitudes.
struct PathDecomposition {
  std::array<PathAmplitude, 4> direct;
  std::array<PathAmplitude, 22> reflected;
  std::array<PathAmplitude, 2> supplementary;
  std::array<ScatteringSet, 3> lasers;

  const PathAmplitude& find(std::string_view label) const;
};

Complex evaluate_path(const PathSpec& path,
                      const std::array<ScatteringSet, 3>& lasers);

std::array<PathAmplitude, 4> direct_amplitudes(const ScatteringSet& s1,
                                               const ScatteringSet& s2,
                                               const ScatteringSet& s3);
std::array<PathAmplitude, 22> reflection_amplitudes(const ScatteringSet& s1,
                                                    const ScatteringSet& s2,
                                                    const ScatteringSet& s3);
std::array<PathAmplitude, 2> supplementary_amplitudes(const ScatteringSet& s1,
                                                      const ScatteringSet& s2,
                                                      const ScatteringSet& s3);

PathDecomposition decompose(const ScatteringSet& s1, const ScatteringSet& s2,
                            const ScatteringSet& s3);

// Phase-free decomposition of the interferometer described by geom and kin.
PathDecomposition decompose_interferometer(const LaserGeometry& geom,
                                           const ChannelKinematics& kin);

// Unit factor relating a path amplitude to its phase-free value. Known for
// A1..A4 and B1..B4 only; throws Error(kUnknownPhaseLaw) otherwise.
Complex phase_law_factor(std::string_view label,
                         const std::array<double, 3>& phases);

// A2 + A3 + B1 + B2 + B3 + B4 with phase laws applied.
Complex mz_transmission(const PathDecomposition& dec,
                        const std::array<double, 3>& phases);

// A2 + A3 with phase laws applied.
Complex direct_mz_transmission(const PathDecomposition& dec,
                               const std::array<double, 3>& phases);

// The two groups of the Mach-Zehnder sum at zero phases:
// first = A2 + B2 + B4 (carries e^{-i Phi}), second = A3 + B1 + B3.
std::pair<Complex, Complex> mz_groups(const PathDecomposition& dec);

enum class PathCoverage {
  printed_table,  // A1..A4 + B1..B22
  complete,       // plus B23, B24
};

// Sum of every tabulated path at eta = 1, evaluated on phase-decorated
// single-laser amplitudes.
Complex full_path_sum(const PathDecomposition& dec,
                      const std::array<double, 3>& phases,
                      PathCoverage coverage = PathCoverage::complete);

// Text dump, one path per line:
//   <label> <eta order> <reflections> <factor> <factor> ...
// with each factor written as t2^l_ge (kind, laser, side, in, out).
void dump_path_table(std::ostream& out);

}  // namespace mzscatter
