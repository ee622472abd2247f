#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include <gtest/gtest.h>

#include "mzscatter/error.hpp"
#include "mzscatter/fringe_analysis.hpp"
#include "mzscatter/path_expansion.hpp"
#include "path_enumeration.hpp"

namespace mzscatter {
namespace {

using Key = std::vector<std::tuple<int, int, int, int, int>>;

Key key_of(std::span<const PathFactor> factors) {
  Key k;
  for (const PathFactor& f : factors) {
    k.emplace_back(f.laser, static_cast<int>(f.kind), static_cast<int>(f.side),
                   index(f.in), index(f.out));
  }
  return k;
}

PathDecomposition decomposition_at(double kxl, double eps = 0.0) {
  const auto s =
      InterferometerSetup::from_kxl(kSodiumMass, kxl, 1e-5, 0.1, eps, 0.0);
  return decompose_interferometer(s.geometry(), s.kinematics());
}

Complex exact_transmission(double kxl, const std::array<double, 3>& phases) {
  const auto s = InterferometerSetup::from_kxl(kSodiumMass, kxl, 1e-5, 0.1);
  const ChannelKinematics kin = s.kinematics();
  return extract_transmission(
      compose_interferometer(s.geometry(), LaserDrive(s.omega, phases), kin));
}

TEST(PathTables, SizesOrdersAndReflections) {
  ASSERT_EQ(direct_path_table().size(), 4u);
  ASSERT_EQ(reflection_path_table().size(), 22u);
  ASSERT_EQ(supplementary_path_table().size(), 2u);
  const int orders[] = {1, 0, 0, 1};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(direct_path_table()[i].eta_order, orders[i]);
    EXPECT_EQ(direct_path_table()[i].reflection_count(), 0);
  }
  for (const auto& p : reflection_path_table()) {
    EXPECT_EQ(p.reflection_count(), 2) << p.label;
    EXPECT_EQ(p.eta_order, 2);
  }
  EXPECT_EQ(reflection_path_table()[0].label, "B1");
  EXPECT_EQ(reflection_path_table()[21].label, "B22");
}

TEST(PathTables, TwoReflectionFamilyIsComplete) {
  std::set<Key> tabulated;
  for (const auto& p : reflection_path_table()) tabulated.insert(key_of(p.factors));
  for (const auto& p : supplementary_path_table()) {
    tabulated.insert(key_of(p.factors));
  }
  ASSERT_EQ(tabulated.size(), 24u);

  std::set<Key> enumerated;
  for (const auto& w : oracle::second_laser_flipping_walks()) {
    enumerated.insert(key_of(w));
  }
  EXPECT_EQ(enumerated, tabulated);

  std::set<Key> direct;
  for (const auto& w : oracle::enumerate_walks(0)) direct.insert(key_of(w));
  std::set<Key> table_direct;
  for (const auto& p : direct_path_table()) table_direct.insert(key_of(p.factors));
  EXPECT_EQ(direct, table_direct);
}

TEST(PathExpansion, MultipleScatteringSeriesConvergesToExact) {
  const PathDecomposition dec = decomposition_at(60.0);
  const Complex exact = exact_transmission(60.0, {0.0, 0.0, 0.0});
  double previous = std::abs(oracle::multiple_scattering_sum(dec.lasers, 0) - exact);
  for (int n = 2; n <= 6; n += 2) {
    const double gap =
        std::abs(oracle::multiple_scattering_sum(dec.lasers, n) - exact);
    EXPECT_LT(gap, previous) << n;
    previous = gap;
  }
  EXPECT_LT(previous, 1e-8);
}

TEST(PathExpansion, PhaseLawsHoldForDirectAndLeadingReflectionPaths) {
  const PathDecomposition free = decomposition_at(40.0, 0.1);
  const std::array<double, 3> phases = {0.9, -1.3, 2.2};
  const PathDecomposition phased =
      decompose(decorate_phase(free.lasers[0], phases[0]),
                decorate_phase(free.lasers[1], phases[1]),
                decorate_phase(free.lasers[2], phases[2]));
  for (const char* label : {"A1", "A2", "A3", "A4", "B1", "B2", "B3", "B4"}) {
    const Complex expected =
        phase_law_factor(label, phases) * free.find(label).value;
    EXPECT_LT(std::abs(phased.find(label).value - expected),
              1e-12 * std::max(1e-300, std::abs(expected)))
        << label;
  }
  try {
    phase_law_factor("B5", phases);
    FAIL() << "expected UnknownPhaseLaw";
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::kUnknownPhaseLaw);
  }
}

TEST(PathExpansion, MachZehnderGroups) {
  const PathDecomposition dec = decomposition_at(36.2232);
  const auto [first, second] = mz_groups(dec);
  EXPECT_EQ(first, dec.find("A2").value + dec.find("B2").value +
                       dec.find("B4").value);
  for (double phi : {-1.0, 0.0, 2.0}) {
    const Complex expected = first * std::exp(Complex(0.0, -phi)) + second;
    EXPECT_LT(std::abs(mz_transmission(dec, {0.0, 0.0, phi}) - expected), 1e-15);
    EXPECT_LT(std::abs(mz_transmission(dec, {phi, 0.0, 0.0}) - expected), 1e-15);
  }
  const Complex direct = direct_mz_transmission(dec, {0.0, 0.0, 0.5});
  EXPECT_LT(std::abs(direct - (dec.find("A2").value * std::exp(Complex(0, -0.5)) +
                               dec.find("A3").value)),
            1e-15);
}

TEST(PathExpansion, SupplementaryPathsCloseTheSecondOrder) {
  const double kxl = 1000.0;
  const PathDecomposition dec = decomposition_at(kxl);
  const std::array<double, 3> phases = {0.0, 0.0, 1.3};
  const Complex exact = exact_transmission(kxl, phases);
  const double printed =
      std::abs(full_path_sum(dec, phases, PathCoverage::printed_table) - exact);
  const double complete =
      std::abs(full_path_sum(dec, phases, PathCoverage::complete) - exact);
  EXPECT_LT(complete, 1e-10);
  EXPECT_GT(printed, 100.0 * complete);
}

TEST(PathExpansion, DumpListsEveryPath) {
  std::ostringstream out;
  dump_path_table(out);
  std::istringstream in(out.str());
  std::string line;
  int paths = 0;
  std::string first;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (first.empty()) first = line;
    ++paths;
  }
  EXPECT_EQ(paths, 28);
  EXPECT_EQ(first, "A1 1 0 t1^l_ge t2^l_ee t3^l_ee");
  EXPECT_NE(out.str().find("B23 2 2 t1^l_gg t2^l_ge r3^l_ee r2^r_eg t3^l_ge"),
            std::string::npos);
}

TEST(PathExpansion, UnknownLabelLookupThrows) {
  const PathDecomposition dec = decomposition_at(100.0);
  EXPECT_THROW(dec.find("C1"), Error);
}

TEST(PathExpansion, TransparentLasersGiveNoExcitation) {
  const ScatteringSet clear;
  const PathDecomposition dec = decompose(clear, clear, clear);
  for (const auto& a : dec.direct) EXPECT_EQ(a.value, Complex(0.0));
  for (const auto& b : dec.reflected) EXPECT_EQ(b.value, Complex(0.0));
  EXPECT_EQ(full_path_sum(dec, {0.1, 0.2, 0.3}), Complex(0.0));
}

TEST(PathExpansion, ReflectionFreeLasersReduceToDirectPaths) {
  PathDecomposition dec = decomposition_at(36.2232);
  std::array<ScatteringSet, 3> sets = dec.lasers;
  for (auto& s : sets) {
    s.r_l.setZero();
    s.r_r.setZero();
  }
  const PathDecomposition clean = decompose(sets[0], sets[1], sets[2]);
  for (const auto& b : clean.reflected) EXPECT_EQ(b.value, Complex(0.0));
  EXPECT_EQ(mz_transmission(clean, {0.0, 0.0, 0.4}),
            direct_mz_transmission(clean, {0.0, 0.0, 0.4}));
}

TEST(PathExpansion, MagnitudeOrderingAndSemiclassicalPhases) {
  const PathDecomposition dec = decomposition_at(1000.0);
  const double a2 = std::abs(dec.find("A2").value);
  const double a3 = std::abs(dec.find("A3").value);
  EXPECT_GT(std::min(a2, a3), 100.0 * std::abs(dec.find("A1").value));
  EXPECT_GT(std::min(a2, a3), 100.0 * std::abs(dec.find("A4").value));
  EXPECT_NEAR(std::abs(wrap_phase(std::arg(dec.find("A2").value /
                                           dec.find("A3").value))),
              kPi, 1e-5);
}

TEST(PathExpansion, ReflectionWeightFallsWithVelocity) {
  double previous = 1e300;
  for (double kxl : {30.0, 100.0, 300.0, 1000.0}) {
    const PathDecomposition dec = decomposition_at(kxl);
    double sum = 0.0;
    for (const auto& b : dec.reflected) sum += std::abs(b.value);
    const double ratio =
        sum / std::abs(dec.find("A2").value - dec.find("A3").value);
    EXPECT_LT(ratio, previous) << kxl;
    EXPECT_LT(ratio, 0.1);
    previous = ratio;
  }
}

TEST(PathExpansion, PhaseLawValues) {
  EXPECT_EQ(phase_law_factor("A2", {0.0, 0.0, 0.0}), Complex(1.0));
  EXPECT_LT(std::abs(phase_law_factor("A3", {0.0, kPi / 3.0, 0.0}) -
                     std::exp(Complex(0.0, -kPi / 3.0))),
            1e-15);
  EXPECT_LT(std::abs(phase_law_factor("B2", {0.2, 0.5, 0.7}) -
                     std::exp(Complex(0.0, -(0.2 - 0.5 + 0.7)))),
            1e-15);
}

TEST(PathExpansion, MachZehnderProbabilityNearExactAtHighVelocity) {
  const auto s = InterferometerSetup::from_kxl(kSodiumMass, 1000.0, 1e-5, 0.1);
  const ChannelKinematics kin = s.kinematics();
  const PathDecomposition dec = decompose_interferometer(s.geometry(), kin);
  for (double phi = -kPi; phi <= kPi; phi += 0.25) {
    const std::array<double, 3> phases = {0.0, 0.0, phi};
    const double p_mz = quantum_probability(mz_transmission(dec, phases), kin);
    EXPECT_GE(p_mz, 0.0);
    EXPECT_LE(p_mz, 1.0);
    EXPECT_NEAR(p_mz, quantum_probability(exact_transmission(1000.0, phases), kin),
                1e-3);
  }
}

}  // namespace
}  // namespace mzscatter
