#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "quditent/errors.hpp"
#include "quditent/inequalities.hpp"
#include "quditent/json_io.hpp"
#include "quditent/numerics.hpp"
#include "quditent/placements.hpp"
#include "quditent/states.hpp"
#include "quditent/tomography.hpp"

using namespace quditent;

namespace {

const double kPi = 3.14159265358979323846;

ProbabilityVector permuted(const ProbabilityVector& p, const std::vector<int>& sigma) {
  std::vector<double> out(p.components.size());
  for (size_t k = 0; k < out.size(); ++k) out[k] = p[sigma[k] - 1];
  return ProbabilityVector{std::move(out)};
}

}  // namespace

TEST_CASE("spin construction") {
  CHECK(Spin::from_dimension(7).two_j == 6);
  CHECK(Spin::from_dimension(7).j() == 3.0);
  CHECK(Spin::from_two_j(5).dimension() == 6);
  CHECK(Spin::from_two_j(5).m_of(0) == -2.5);
  CHECK(Spin::from_two_j(5).m_of(5) == 2.5);
  CHECK_THROWS_AS(Spin::from_dimension(17), Error);
  CHECK_THROWS_AS(Spin::from_two_j(-1), Error);
}

TEST_CASE("zero rotation is the identity for every spin") {
  for (int two_j = 0; two_j <= 15; ++two_j) {
    const CMatrix d = wigner_small_d(Spin::from_two_j(two_j), 0.0);
    CHECK(max_abs_diff(d, CMatrix::identity(two_j + 1)) <= 1e-14);
  }
}

TEST_CASE("spin-1/2 rotation matches the closed form") {
  // In the ascending-m basis exp(-i beta J_y) is [[cos, sin], [-sin, cos]]
  // of the half angle.
  const Spin half = Spin::from_two_j(1);
  for (double beta : {0.3, 1.1, 2.5, kPi}) {
    const CMatrix d = wigner_small_d(half, beta);
    const double c = std::cos(0.5 * beta);
    const double s = std::sin(0.5 * beta);
    CHECK(std::abs(d(0, 0).real() - c) <= 1e-14);
    CHECK(std::abs(d(0, 1).real() - s) <= 1e-14);
    CHECK(std::abs(d(1, 0).real() + s) <= 1e-14);
    CHECK(std::abs(d(1, 1).real() - c) <= 1e-14);
  }
  // At beta = pi the matrix is antidiagonal with unit magnitude.
  const CMatrix flip = wigner_small_d(half, kPi);
  CHECK(std::abs(std::abs(flip(0, 1)) - 1.0) <= 1e-14);
  CHECK(std::abs(std::abs(flip(1, 0)) - 1.0) <= 1e-14);
  CHECK(std::abs(flip(0, 0)) <= 1e-14);
  CHECK(std::abs(flip(1, 1)) <= 1e-14);
}

TEST_CASE("small d-matrix equals the exponential of the spin generator") {
  for (int two_j : {1, 2, 3, 6}) {
    const CMatrix jy = oracles::spin_jy(two_j);
    for (double beta : {0.4, kPi / 2, 1.9}) {
      CMatrix gen(two_j + 1, two_j + 1);
      for (int i = 0; i <= two_j; ++i)
        for (int k = 0; k <= two_j; ++k) gen(i, k) = cx(0.0, -beta) * jy(i, k);
      const CMatrix expected = oracles::expm(gen);
      CHECK(max_abs_diff(wigner_small_d(Spin::from_two_j(two_j), beta), expected) <= 1e-12);
    }
  }
}

TEST_CASE("d-matrices are orthogonal and compose additively") {
  std::mt19937_64 eng(127);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int two_j : {2, 4, 6}) {
    const Spin spin = Spin::from_two_j(two_j);
    for (int trial = 0; trial < 10; ++trial) {
      const double b1 = angle(eng);
      const double b2 = angle(eng);
      const CMatrix d1 = wigner_small_d(spin, b1);
      CHECK(max_abs_diff(d1 * d1.adjoint(), CMatrix::identity(spin.dimension())) <= 1e-10);
      CHECK(max_abs_diff(d1 * wigner_small_d(spin, b2), wigner_small_d(spin, b1 + b2)) <= 1e-10);
    }
  }
}

TEST_CASE("rotation unitary") {
  const Spin spin = Spin::from_dimension(7);
  CHECK(max_abs_diff(rotation_unitary(spin, {0.0, 0.0, 0.0}), CMatrix::identity(7)) <= 1e-14);

  std::mt19937_64 eng(131);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix u = rotation_unitary(spin, {angle(eng), angle(eng), angle(eng)});
    CHECK(max_abs_diff(u * u.adjoint(), CMatrix::identity(7)) <= 1e-12);
  }

  // A gamma-only rotation is a diagonal phase, so it commutes with diagonal
  // states.
  CMatrix d(3, 3);
  d(0, 0) = 0.5;
  d(1, 1) = 0.3;
  d(2, 2) = 0.2;
  const CMatrix u = rotation_unitary(Spin::from_dimension(3), {0.0, 0.0, 1.7});
  CHECK(max_abs_diff(u * d * u.adjoint(), d) <= 1e-14);
}

TEST_CASE("tomogram at theta zero is the diagonal") {
  const DensityMatrix rho = sample_density_matrix(7, 7, RandomSource{137, 0});
  const Tomogram t = compute_tomogram(rho, 0.0, 1.3);
  for (int m = 0; m < 7; ++m) CHECK(std::abs(t.w[m] - rho.m(m, m).real()) <= 1e-12);
}

TEST_CASE("maximally mixed states have uniform tomograms at every angle") {
  CMatrix fifth = CMatrix::identity(5);
  for (auto& v : fifth.data()) v *= 0.2;
  std::mt19937_64 eng(139);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int trial = 0; trial < 10; ++trial) {
    const Tomogram t = compute_tomogram(DensityMatrix{fifth}, angle(eng), angle(eng));
    for (int m = 0; m < 5; ++m) CHECK(std::abs(t.w[m] - 0.2) <= 1e-12);
  }
}

TEST_CASE("spin-1/2 basis state at theta = pi/2 splits evenly") {
  CMatrix up(2, 2);
  up(0, 0) = 1.0;
  const Tomogram t = compute_tomogram(DensityMatrix{up}, kPi / 2.0, 0.7);
  CHECK(std::abs(t.w[0] - 0.5) <= 1e-12);
  CHECK(std::abs(t.w[1] - 0.5) <= 1e-12);
}

TEST_CASE("tomograms are normalized for random states and angles") {
  std::mt19937_64 eng(149);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(eng() % 7);
    const DensityMatrix rho = sample_density_matrix(n, n, eng);
    const Tomogram t = compute_tomogram(rho, angle(eng), angle(eng));
    const double sum = std::accumulate(t.w.components.begin(), t.w.components.end(), 0.0);
    CHECK(std::abs(sum - 1.0) <= 1e-12);
  }
}

TEST_CASE("tomogram entropy majorizes the state entropy") {
  std::mt19937_64 eng(151);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(eng() % 7);
    const DensityMatrix rho = sample_density_matrix(n, 1 + static_cast<int>(eng() % n), eng);
    const Tomogram t = compute_tomogram(rho, angle(eng), angle(eng));
    CHECK(shannon_entropy(t.w) >= von_neumann_entropy(rho) - 1e-9);
  }
}

TEST_CASE("preset groupings") {
  const Spin j3 = Spin::from_dimension(7);
  const Spin j2 = Spin::from_dimension(5);

  const GroupingSpec ssa3 = preset_grouping(j3, PresetKind::strong_subadditivity, PresetVariant::derived);
  const GroupingSpec from_cube = grouping_from_placement(lex_placement(7, Shape{{2, 2, 2}}), true);
  CHECK(ssa3.lhs == from_cube.lhs);
  CHECK(ssa3.rhs == from_cube.rhs);
  CHECK(!ssa3.audit_only);

  const GroupingSpec sub2 = preset_grouping(j2, PresetKind::subadditivity, PresetVariant::derived);
  CHECK(sub2.n == 5);
  CHECK(sub2.rhs == std::vector<std::vector<std::vector<int>>>{{{1, 2, 3}, {4, 5}}, {{1, 4}, {2}, {3, 5}}});

  const GroupingSpec sub3_printed = preset_grouping(j3, PresetKind::subadditivity, PresetVariant::printed);
  CHECK(sub3_printed.audit_only);

  CHECK_THROWS_AS(preset_grouping(Spin::from_dimension(3), PresetKind::subadditivity, PresetVariant::derived),
                  Error);
  CHECK_THROWS_AS(preset_grouping(j2, PresetKind::strong_subadditivity, PresetVariant::printed), Error);
}

TEST_CASE("presets agree with the bundled data files") {
  auto load = [](const char* name) {
    return grouping_from_json(load_json_file(std::string(QUDITENT_DATA_DIR "/specs/") + name));
  };
  const GroupingSpec j2_file = load("appendix_j2.json");
  const GroupingSpec j2_preset =
      preset_grouping(Spin::from_dimension(5), PresetKind::subadditivity, PresetVariant::derived);
  CHECK(j2_file.lhs == j2_preset.lhs);
  CHECK(j2_file.rhs == j2_preset.rhs);

  const GroupingSpec j3_file = load("appendix_j3.json");
  const GroupingSpec j3_preset =
      preset_grouping(Spin::from_dimension(7), PresetKind::strong_subadditivity, PresetVariant::derived);
  CHECK(j3_file.lhs == j3_preset.lhs);
  CHECK(j3_file.rhs == j3_preset.rhs);

  const GroupingSpec sub1_file = load("sub1_printed.json");
  const GroupingSpec sub1_preset =
      preset_grouping(Spin::from_dimension(7), PresetKind::subadditivity, PresetVariant::printed);
  CHECK(sub1_file.lhs == sub1_preset.lhs);
  CHECK(sub1_file.rhs == sub1_preset.rhs);

  const GroupingSpec sub1d_file = load("sub1_derived.json");
  const GroupingSpec sub1d_preset =
      preset_grouping(Spin::from_dimension(7), PresetKind::subadditivity, PresetVariant::derived);
  CHECK(sub1d_file.lhs == sub1d_preset.lhs);
  CHECK(sub1d_file.rhs == sub1d_preset.rhs);
}

TEST_CASE("derived tomogram inequalities hold on an angle grid") {
  const GroupingSpec sub2 =
      preset_grouping(Spin::from_dimension(5), PresetKind::subadditivity, PresetVariant::derived);
  const GroupingSpec ssa3 =
      preset_grouping(Spin::from_dimension(7), PresetKind::strong_subadditivity, PresetVariant::derived);

  std::mt19937_64 eng(157);
  for (int trial = 0; trial < 5; ++trial) {
    const DensityMatrix rho5 = sample_density_matrix(5, 5, eng);
    const DensityMatrix rho7 = sample_density_matrix(7, 7, eng);
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) {
        const double theta = kPi * a / 5.0;
        const double phi = 2.0 * kPi * b / 5.0;
        CHECK(evaluate_grouping(compute_tomogram(rho5, theta, phi).w, sub2).gap >= -1e-9);
        CHECK(evaluate_grouping(compute_tomogram(rho7, theta, phi).w, ssa3).gap >= -1e-9);
      }
  }
}

TEST_CASE("derived inequalities survive every projection relabeling") {
  const GroupingSpec ssa3 =
      preset_grouping(Spin::from_dimension(7), PresetKind::strong_subadditivity, PresetVariant::derived);
  const DensityMatrix rho7 = sample_density_matrix(7, 7, RandomSource{163, 0});
  const ProbabilityVector w7 = compute_tomogram(rho7, 1.1, 0.4).w;
  std::vector<int> sigma7{1, 2, 3, 4, 5, 6, 7};
  do {
    CHECK(evaluate_grouping(permuted(w7, sigma7), ssa3).gap >= -1e-9);
  } while (std::next_permutation(sigma7.begin(), sigma7.end()));

  const GroupingSpec sub2 =
      preset_grouping(Spin::from_dimension(5), PresetKind::subadditivity, PresetVariant::derived);
  const DensityMatrix rho5 = sample_density_matrix(5, 5, RandomSource{167, 0});
  const ProbabilityVector w5 = compute_tomogram(rho5, 2.1, 5.0).w;
  std::vector<int> sigma5{1, 2, 3, 4, 5};
  do {
    CHECK(evaluate_grouping(permuted(w5, sigma5), sub2).gap >= -1e-9);
  } while (std::next_permutation(sigma5.begin(), sigma5.end()));
}
