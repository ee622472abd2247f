#include "mzscatter/path_expansion.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "mzscatter/error.hpp"

namespace mzscatter {

namespace {

constexpr Channel G = Channel::g;
constexpr Channel E = Channel::e;
constexpr Incidence L = Incidence::left;
constexpr Incidence R = Incidence::right;

constexpr PathFactor t(int laser, Incidence side, Channel in, Channel out) {
  return {laser, AmplitudeKind::transmission, side, in, out};
}
constexpr PathFactor r(int laser, Incidence side, Channel in, Channel out) {
  return {laser, AmplitudeKind::reflection, side, in, out};
}

// Direct paths.
constexpr PathFactor kA1[] = {t(1, L, G, E), t(2, L, E, E), t(3, L, E, E)};
constexpr PathFactor kA2[] = {t(1, L, G, E), t(2, L, E, G), t(3, L, G, E)};
constexpr PathFactor kA3[] = {t(1, L, G, G), t(2, L, G, E), t(3, L, E, E)};
constexpr PathFactor kA4[] = {t(1, L, G, G), t(2, L, G, G), t(3, L, G, E)};

// Two-reflection paths, same order as the published list.
constexpr PathFactor kB1[] = {t(1, L, G, G), r(2, L, G, G), r(1, R, G, G),
                              t(2, L, G, E), t(3, L, E, E)};
constexpr PathFactor kB2[] = {t(1, L, G, G), r(2, L, G, G), r(1, R, G, E),
                              t(2, L, E, G), t(3, L, G, E)};
constexpr PathFactor kB3[] = {t(1, L, G, G), t(2, L, G, E), r(3, L, E, G),
                              r(2, R, G, G), t(3, L, G, E)};
constexpr PathFactor kB4[] = {t(1, L, G, E), t(2, L, E, G), r(3, L, G, G),
                              r(2, R, G, G), t(3, L, G, E)};
constexpr PathFactor kB5[] = {t(1, L, G, G), r(2, L, G, E), r(1, R, E, G),
                              t(2, L, G, E), t(3, L, E, E)};
constexpr PathFactor kB6[] = {t(1, L, G, G), r(2, L, G, E), r(1, R, E, E),
                              t(2, L, E, G), t(3, L, G, E)};
constexpr PathFactor kB7[] = {t(1, L, G, G), t(2, L, G, E), r(3, L, E, G),
                              r(2, R, G, E), t(3, L, E, E)};
constexpr PathFactor kB8[] = {t(1, L, G, E), t(2, L, E, G), r(3, L, G, G),
                              r(2, R, G, E), t(3, L, E, E)};
constexpr PathFactor kB9[] = {t(1, L, G, E), r(2, L, E, G), r(1, R, G, G),
                              t(2, L, G, E), t(3, L, E, E)};
constexpr PathFactor kB10[] = {t(1, L, G, E), r(2, L, E, G), r(1, R, G, E),
                               t(2, L, E, G), t(3, L, G, E)};
constexpr PathFactor kB11[] = {t(1, L, G, G), t(2, L, G, E), r(3, L, E, E),
                               r(2, R, E, E), t(3, L, E, E)};
constexpr PathFactor kB12[] = {t(1, L, G, G), t(2, L, G, E), r(3, L, E, E),
                               t(2, R, E, G), r(1, R, G, G), t(2, L, G, E),
                               t(3, L, E, E)};
constexpr PathFactor kB13[] = {t(1, L, G, G), t(2, L, G, E), r(3, L, E, G),
                               t(2, R, G, E), r(1, R, E, G), t(2, L, G, E),
                               t(3, L, E, E)};
constexpr PathFactor kB14[] = {t(1, L, G, G), t(2, L, G, E), r(3, L, E, E),
                               t(2, R, E, G), r(1, R, G, E), t(2, L, E, G),
                               t(3, L, G, E)};
constexpr PathFactor kB15[] = {t(1, L, G, G), t(2, L, G, E), r(3, L, E, G),
                               t(2, R, G, E), r(1, R, E, E), t(2, L, E, G),
                               t(3, L, G, E)};
constexpr PathFactor kB16[] = {t(1, L, G, E), t(2, L, E, G), r(3, L, G, E),
                               r(2, R, E, E), t(3, L, E, E)};
constexpr PathFactor kB17[] = {t(1, L, G, E), r(2, L, E, E), r(1, R, E, G),
                               t(2, L, G, E), t(3, L, E, E)};
constexpr PathFactor kB18[] = {t(1, L, G, E), t(2, L, E, G), r(3, L, G, E),
                               t(2, R, E, G), r(1, R, G, G), t(2, L, G, E),
                               t(3, L, E, E)};
constexpr PathFactor kB19[] = {t(1, L, G, E), t(2, L, E, G), r(3, L, G, G),
                               t(2, R, G, E), r(1, R, E, G), t(2, L, G, E),
                               t(3, L, E, E)};
constexpr PathFactor kB20[] = {t(1, L, G, E), r(2, L, E, E), r(1, R, E, E),
                               t(2, L, E, G), t(3, L, G, E)};
constexpr PathFactor kB21[] = {t(1, L, G, E), t(2, L, E, G), r(3, L, G, E),
                               t(2, R, E, G), r(1, R, G, E), t(2, L, E, G),
                               t(3, L, G, E)};
constexpr PathFactor kB22[] = {t(1, L, G, E), t(2, L, E, G), r(3, L, G, G),
                               t(2, R, G, E), r(1, R, E, E), t(2, L, E, G),
                               t(3, L, G, E)};

// Completion of the second-laser-flipping family between lasers 2 and 3.
constexpr PathFactor kB23[] = {t(1, L, G, G), t(2, L, G, E), r(3, L, E, E),
                               r(2, R, E, G), t(3, L, G, E)};
constexpr PathFactor kB24[] = {t(1, L, G, E), t(2, L, E, G), r(3, L, G, E),
                               r(2, R, E, G), t(3, L, G, E)};

const PathSpec kDirect[] = {
    {"A1", 1, kA1}, {"A2", 0, kA2}, {"A3", 0, kA3}, {"A4", 1, kA4}};

const PathSpec kReflected[] = {
    {"B1", 2, kB1},   {"B2", 2, kB2},   {"B3", 2, kB3},   {"B4", 2, kB4},
    {"B5", 2, kB5},   {"B6", 2, kB6},   {"B7", 2, kB7},   {"B8", 2, kB8},
    {"B9", 2, kB9},   {"B10", 2, kB10}, {"B11", 2, kB11}, {"B12", 2, kB12},
    {"B13", 2, kB13}, {"B14", 2, kB14}, {"B15", 2, kB15}, {"B16", 2, kB16},
    {"B17", 2, kB17}, {"B18", 2, kB18}, {"B19", 2, kB19}, {"B20", 2, kB20},
    {"B21", 2, kB21}, {"B22", 2, kB22}};

const PathSpec kSupplementary[] = {{"B23", 2, kB23}, {"B24", 2, kB24}};

const Matrix2& block(const ScatteringSet& s, AmplitudeKind kind,
                     Incidence side) {
  if (kind == AmplitudeKind::transmission) {
    return side == Incidence::left ? s.t_l : s.t_r;
  }
  return side == Incidence::left ? s.r_l : s.r_r;
}

template <std::size_t N>
std::array<PathAmplitude, N> evaluate_table(
    std::span<const PathSpec> table,
    const std::array<ScatteringSet, 3>& lasers) {
  std::array<PathAmplitude, N> out;
  for (std::size_t k = 0; k < N; ++k) {
    const PathSpec& path = table[k];
    out[k] = {path.label, evaluate_path(path, lasers), path.eta_order,
              path.reflection_count()};
  }
  return out;
}

char channel_letter(Channel c) { return c == Channel::g ? 'g' : 'e'; }

void write_paths(std::ostream& out, std::span<const PathSpec> table) {
  for (const PathSpec& path : table) {
    out << path.label << ' ' << path.eta_order << ' '
        << path.reflection_count();
    for (const PathFactor& f : path.factors) {
      out << ' ' << (f.kind == AmplitudeKind::transmission ? 't' : 'r')
          << f.laser << '^' << (f.side == Incidence::left ? 'l' : 'r') << '_'
          << channel_letter(f.in) << channel_letter(f.out);
    }
    out << '\n';
  }
}

}  // namespace

int PathSpec::reflection_count() const {
  return static_cast<int>(std::count_if(
      factors.begin(), factors.end(), [](const PathFactor& f) {
        return f.kind == AmplitudeKind::reflection;
      }));
}

std::span<const PathSpec> direct_path_table() { return kDirect; }
std::span<const PathSpec> reflection_path_table() { return kReflected; }
std::span<const PathSpec> supplementary_path_table() { return kSupplementary; }

const PathAmplitude& PathDecomposition::find(std::string_view label) const {
  for (const auto& a : direct) {
    if (a.label == label) return a;
  }
  for (const auto& b : reflected) {
    if (b.label == label) return b;
  }
  for (const auto& b : supplementary) {
    if (b.label == label) return b;
  }
  throw Error(ErrorKind::kInvalidArgument,
              "no path labelled " + std::string(label));
}

Complex evaluate_path(const PathSpec& path,
                      const std::array<ScatteringSet, 3>& lasers) {
  Complex product = 1.0;
  for (const PathFactor& f : path.factors) {
    product *=
        block(lasers[f.laser - 1], f.kind, f.side)(index(f.in), index(f.out));
  }
  return product;
}

std::array<PathAmplitude, 4> direct_amplitudes(const ScatteringSet& s1,
                                               const ScatteringSet& s2,
                                               const ScatteringSet& s3) {
  return evaluate_table<4>(kDirect, {s1, s2, s3});
}

std::array<PathAmplitude, 22> reflection_amplitudes(const ScatteringSet& s1,
                                                    const ScatteringSet& s2,
                                                    const ScatteringSet& s3) {
  return evaluate_table<22>(kReflected, {s1, s2, s3});
}

std::array<PathAmplitude, 2> supplementary_amplitudes(const ScatteringSet& s1,
                                                      const ScatteringSet& s2,
                                                      const ScatteringSet& s3) {
  return evaluate_table<2>(kSupplementary, {s1, s2, s3});
}

PathDecomposition decompose(const ScatteringSet& s1, const ScatteringSet& s2,
                            const ScatteringSet& s3) {
  PathDecomposition dec;
  dec.lasers = {s1, s2, s3};
  dec.direct = direct_amplitudes(s1, s2, s3);
  dec.reflected = reflection_amplitudes(s1, s2, s3);
  dec.supplementary = supplementary_amplitudes(s1, s2, s3);
  return dec;
}

PathDecomposition decompose_interferometer(const LaserGeometry& geom,
                                           const ChannelKinematics& kin) {
  const LaserDrive drive(kin.omega);
  const auto lasers = laser_transfers(geom, drive, kin);
  return decompose(amplitudes_from_transfer(lasers[0]),
                   amplitudes_from_transfer(lasers[1]),
                   amplitudes_from_transfer(lasers[2]));
}

Complex phase_law_factor(std::string_view label,
                         const std::array<double, 3>& phases) {
  const double interfering = phases[0] - phases[1] + phases[2];
  double exponent = 0.0;
  if (label == "A1") {
    exponent = phases[0];
  } else if (label == "A2" || label == "B2" || label == "B4") {
    exponent = interfering;
  } else if (label == "A3" || label == "B1" || label == "B3") {
    exponent = phases[1];
  } else if (label == "A4") {
    exponent = phases[2];
  } else {
    throw Error(ErrorKind::kUnknownPhaseLaw,
                "no factorized phase law for " + std::string(label));
  }
  return std::exp(Complex(0.0, -exponent));
}

std::pair<Complex, Complex> mz_groups(const PathDecomposition& dec) {
  const Complex first =
      dec.find("A2").value + dec.find("B2").value + dec.find("B4").value;
  const Complex second =
      dec.find("A3").value + dec.find("B1").value + dec.find("B3").value;
  return {first, second};
}

Complex mz_transmission(const PathDecomposition& dec,
                        const std::array<double, 3>& phases) {
  Complex sum = 0.0;
  for (std::string_view label : {"A2", "A3", "B1", "B2", "B3", "B4"}) {
    sum += phase_law_factor(label, phases) * dec.find(label).value;
  }
  return sum;
}

Complex direct_mz_transmission(const PathDecomposition& dec,
                               const std::array<double, 3>& phases) {
  return phase_law_factor("A2", phases) * dec.find("A2").value +
         phase_law_factor("A3", phases) * dec.find("A3").value;
}

Complex full_path_sum(const PathDecomposition& dec,
                      const std::array<double, 3>& phases,
                      PathCoverage coverage) {
  const std::array<ScatteringSet, 3> decorated = {
      decorate_phase(dec.lasers[0], phases[0]),
      decorate_phase(dec.lasers[1], phases[1]),
      decorate_phase(dec.lasers[2], phases[2])};
  Complex sum = 0.0;
  for (const PathSpec& path : kDirect) sum += evaluate_path(path, decorated);
  for (const PathSpec& path : kReflected) sum += evaluate_path(path, decorated);
  if (coverage == PathCoverage::complete) {
    for (const PathSpec& path : kSupplementary) {
      sum += evaluate_path(path, decorated);
    }
  }
  return sum;
}

void dump_path_table(std::ostream& out) {
  out << "# label eta_order reflections factors...\n"
      << "# factor: <t|r><laser>^<l|r>_<in><out>, product read left to right\n";
  write_paths(out, kDirect);
  write_paths(out, kReflected);
  write_paths(out, kSupplementary);
}

}  // namespace mzscatter
