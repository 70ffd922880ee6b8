#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "quditent/matrix.hpp"
#include "quditent/tolerances.hpp"

namespace quditent {

// Nonnegative vector summing to 1. Built through validate_probability_vector
// (or by construction inside the library); entries are stored as given apart
// from clamping tiny negatives, never renormalized.
struct ProbabilityVector {
  std::vector<double> components;

  int dimension() const { return static_cast<int>(components.size()); }
  double operator[](int k) const { return components[static_cast<size_t>(k)]; }
};

// Hermitian positive-semidefinite unit-trace complex matrix.
struct DensityMatrix {
  CMatrix m;

  int dimension() const { return m.rows(); }
};

// Explicit, value-typed randomness. Identical (seed, stream) pairs give
// identical draws; parallel users derive independent streams by stream id.
struct RandomSource {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  RandomSource with_stream(std::uint64_t s) const { return {seed, s}; }
  std::mt19937_64 engine() const;
};

ProbabilityVector validate_probability_vector(std::vector<double> raw,
                                              const Tolerances& tol = Tolerances::global());

DensityMatrix validate_density_matrix(const CMatrix& raw,
                                      const Tolerances& tol = Tolerances::global());

double shannon_entropy(const ProbabilityVector& p);

double von_neumann_entropy(const DensityMatrix& rho);

// Flat Dirichlet via normalized unit-exponential draws.
ProbabilityVector sample_probability_vector(int n, std::mt19937_64& eng);
ProbabilityVector sample_probability_vector(int n, const RandomSource& rng);

// Ginibre construction: rho = G G† / Tr(G G†) with G complex n x rank of
// independent standard Gaussian entries.
DensityMatrix sample_density_matrix(int n, int rank, std::mt19937_64& eng);
DensityMatrix sample_density_matrix(int n, int rank, const RandomSource& rng);

DensityMatrix pure_state_density(const std::vector<cx>& amplitudes);

}  // namespace quditent
