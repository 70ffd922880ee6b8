#include "quditent/states.hpp"

#include <cmath>
#include <string>

#include "quditent/errors.hpp"
#include "quditent/numerics.hpp"

namespace quditent {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::mt19937_64 RandomSource::engine() const {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ stream));
}

ProbabilityVector validate_probability_vector(std::vector<double> raw, const Tolerances& tol) {
  if (raw.empty()) fail(Errc::dimension_mismatch, "empty probability vector");
  double sum = 0.0;
  for (double& v : raw) {
    if (v < -tol.prob_entry_clip)
      fail(Errc::negative_entry, "component " + std::to_string(v) + " below -" + std::to_string(tol.prob_entry_clip));
    if (v < 0.0) v = 0.0;
    sum += v;
  }
  if (std::abs(sum - 1.0) > tol.prob_sum)
    fail(Errc::not_normalized, "components sum to " + std::to_string(sum));
  return ProbabilityVector{std::move(raw)};
}

DensityMatrix validate_density_matrix(const CMatrix& raw, const Tolerances& tol) {
  if (!raw.square()) fail(Errc::non_square, "density matrix must be square");
  const double defect = raw.hermiticity_defect();
  if (defect > tol.hermiticity)
    fail(Errc::non_hermitian, "Hermitian defect " + std::to_string(defect));
  const double tr = raw.trace().real();
  if (std::abs(tr - 1.0) > tol.trace_one) fail(Errc::trace_not_one, "trace is " + std::to_string(tr));
  const Spectrum spec = hermitian_spectrum(raw, tol.hermiticity);
  const double min_ev = spec.values.back();
  if (min_ev < -tol.psd_floor) fail(Errc::not_positive, "minimum eigenvalue " + std::to_string(min_ev));
  return DensityMatrix{raw};
}

double shannon_entropy(const ProbabilityVector& p) {
  return entropy_kernel(p.components, Tolerances::global().prob_entry_clip);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_kernel(hermitian_spectrum(rho.m).clamped());
}

ProbabilityVector sample_probability_vector(int n, std::mt19937_64& eng) {
  if (n < 1) fail(Errc::dimension_mismatch, "dimension must be >= 1");
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(static_cast<size_t>(n));
  double sum = 0.0;
  for (double& v : p) {
    v = expo(eng);
    sum += v;
  }
  for (double& v : p) v /= sum;
  return ProbabilityVector{std::move(p)};
}

ProbabilityVector sample_probability_vector(int n, const RandomSource& rng) {
  std::mt19937_64 eng = rng.engine();
  return sample_probability_vector(n, eng);
}

DensityMatrix sample_density_matrix(int n, int rank, std::mt19937_64& eng) {
  if (rank < 1 || rank > n) fail(Errc::bad_rank, "rank " + std::to_string(rank) + " outside [1, " + std::to_string(n) + "]");
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix g(n, rank);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < rank; ++j) {
      const double re = gauss(eng);
      const double im = gauss(eng);
      g(i, j) = cx(re, im);
    }
  CMatrix rho = g * g.adjoint();
  const double tr = rho.trace().real();
  for (cx& v : rho.data()) v /= tr;
  return DensityMatrix{std::move(rho)};
}

DensityMatrix sample_density_matrix(int n, int rank, const RandomSource& rng) {
  std::mt19937_64 eng = rng.engine();
  return sample_density_matrix(n, rank, eng);
}

DensityMatrix pure_state_density(const std::vector<cx>& amplitudes) {
  double norm_sq = 0.0;
  for (const cx& v : amplitudes) norm_sq += std::norm(v);
  if (norm_sq <= 0.0) fail(Errc::zero_vector, "amplitude vector has zero norm");
  const int n = static_cast<int>(amplitudes.size());
  CMatrix rho(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rho(i, j) = amplitudes[i] * std::conj(amplitudes[j]) / norm_sq;
  return DensityMatrix{std::move(rho)};
}

}  // namespace quditent
