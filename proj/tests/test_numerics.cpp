#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "quditent/errors.hpp"
#include "quditent/numerics.hpp"
#include "quditent/states.hpp"
#include "quditent/tomography.hpp"

using namespace quditent;

namespace {

CMatrix random_hermitian(int n, std::mt19937_64& eng, double scale = 1.0) {
  std::normal_distribution<double> gauss(0.0, scale);
  CMatrix h(n, n);
  for (int i = 0; i < n; ++i) {
    h(i, i) = gauss(eng);
    for (int j = i + 1; j < n; ++j) {
      const cx v(gauss(eng), gauss(eng));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

CMatrix diag(std::vector<double> values) {
  const int n = static_cast<int>(values.size());
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = values[static_cast<size_t>(i)];
  return m;
}

}  // namespace

TEST_CASE("identity spectrum") {
  const Spectrum s = hermitian_spectrum(CMatrix::identity(2));
  REQUIRE(s.values.size() == 2);
  CHECK(std::abs(s.values[0] - 1.0) <= 1e-14);
  CHECK(std::abs(s.values[1] - 1.0) <= 1e-14);
}

TEST_CASE("diagonal matrix spectrum is its diagonal, sorted descending") {
  const Spectrum s = hermitian_spectrum(diag({0.25, 0.5, 0.25}));
  CHECK(std::abs(s.values[0] - 0.5) <= 1e-14);
  CHECK(std::abs(s.values[1] - 0.25) <= 1e-14);
  CHECK(std::abs(s.values[2] - 0.25) <= 1e-14);
}

TEST_CASE("random 2x2 matches the closed-form quadratic roots") {
  std::mt19937_64 eng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const CMatrix h = random_hermitian(2, eng);
    const auto expected = oracles::eig2x2_hermitian(h(0, 0).real(), h(1, 1).real(), h(0, 1));
    const Spectrum s = hermitian_spectrum(h);
    CHECK(std::abs(s.values[0] - expected[0]) <= 1e-12);
    CHECK(std::abs(s.values[1] - expected[1]) <= 1e-12);
  }
}

TEST_CASE("eigenvalue sum equals the trace") {
  std::mt19937_64 eng(11);
  for (int n = 2; n <= 8; ++n) {
    const CMatrix h = random_hermitian(n, eng);
    const Spectrum s = hermitian_spectrum(h);
    CHECK(std::abs(s.sum() - h.trace().real()) <= 1e-10);
  }
}

TEST_CASE("full decomposition reconstructs the input") {
  std::mt19937_64 eng(13);
  for (int n : {3, 8, 16}) {
    const CMatrix h = random_hermitian(n, eng);
    const Eigensystem es = hermitian_eigensystem(h);
    CMatrix rebuilt(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        cx sum = 0.0;
        for (int k = 0; k < n; ++k)
          sum += es.vectors(i, k) * es.values[static_cast<size_t>(k)] * std::conj(es.vectors(j, k));
        rebuilt(i, j) = sum;
      }
    CHECK(max_abs_diff(rebuilt, h) <= 1e-10);
    CHECK(max_abs_diff(es.vectors * es.vectors.adjoint(), CMatrix::identity(n)) <= 1e-12);
  }
}

TEST_CASE("spectrum is invariant under unitary conjugation") {
  std::mt19937_64 eng(17);
  std::uniform_real_distribution<double> angle(0.0, 6.28);
  for (int n = 2; n <= 8; ++n) {
    const CMatrix h = random_hermitian(n, eng);
    const CMatrix u = rotation_unitary(Spin::from_dimension(n), {angle(eng), angle(eng), angle(eng)});
    const Spectrum a = hermitian_spectrum(h);
    const Spectrum b = hermitian_spectrum(u * h * u.adjoint());
    for (size_t k = 0; k < a.values.size(); ++k) CHECK(std::abs(a.values[k] - b.values[k]) <= 1e-10);
  }
}

TEST_CASE("non-Hermitian and non-square inputs are rejected") {
  CMatrix bad(2, 2);
  bad(0, 1) = 1.0;
  try {
    hermitian_spectrum(bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::non_hermitian);
  }

  try {
    hermitian_spectrum(CMatrix(2, 3));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::non_square);
  }
}

TEST_CASE("uniform seven-outcome entropy is ln 7") {
  const std::vector<double> p(7, 1.0 / 7.0);
  CHECK(std::abs(entropy_kernel(p) - std::log(7.0)) <= 1e-12);
}

TEST_CASE("degenerate distribution has zero entropy") {
  const std::vector<double> p{1.0, 0.0, 0.0};
  CHECK(entropy_kernel(p) == 0.0);
}

TEST_CASE("half-quarter-quarter entropy by direct summation") {
  const std::vector<double> p{0.5, 0.25, 0.25};
  const double expected = oracles::direct_entropy(p);
  CHECK(std::abs(entropy_kernel(p) - expected) <= 1e-15);
  CHECK(std::abs(entropy_kernel(p) - 1.5 * std::log(2.0)) <= 1e-12);
}

TEST_CASE("entropy kernel clamps rounding noise and rejects genuine negativity") {
  CHECK(entropy_kernel(std::vector<double>{0.5, 0.5, -5e-11}) ==
        entropy_kernel(std::vector<double>{0.5, 0.5}));
  CHECK_THROWS_AS(entropy_kernel(std::vector<double>{0.5, 0.5, -1e-9}), Error);
}

TEST_CASE("entropy of a probability vector lies in [0, ln N], maximal only at uniform") {
  std::mt19937_64 eng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(eng() % 7);
    const ProbabilityVector p = sample_probability_vector(n, eng);
    const double h = entropy_kernel(p.components);
    CHECK(h >= 0.0);
    CHECK(h <= std::log(static_cast<double>(n)) + 1e-12);

    bool uniform = true;
    for (double v : p.components)
      if (std::abs(v - 1.0 / n) > 1e-9) uniform = false;
    if (std::log(static_cast<double>(n)) - h <= 1e-12) CHECK(uniform);
  }
  const std::vector<double> u(5, 0.2);
  CHECK(std::abs(entropy_kernel(u) - std::log(5.0)) <= 1e-12);
}

TEST_CASE("appending zeros never changes the entropy") {
  std::mt19937_64 eng(23);
  for (int trial = 0; trial < 50; ++trial) {
    ProbabilityVector p = sample_probability_vector(6, eng);
    const double before = entropy_kernel(p.components);
    p.components.push_back(0.0);
    p.components.insert(p.components.begin(), 0.0);
    CHECK(entropy_kernel(p.components) == before);
  }
}

TEST_CASE("spectrum clamping distinguishes noise from non-PSD input") {
  const Spectrum noisy{{1.0, -5e-11}};
  CHECK(noisy.clamped()[1] == 0.0);
  const Spectrum bad{{1.0, -1e-8}};
  CHECK_THROWS_AS(bad.clamped(), Error);
}
