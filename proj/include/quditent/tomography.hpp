#pragma once

#include "quditent/inequalities.hpp"
#include "quditent/matrix.hpp"
#include "quditent/states.hpp"

namespace quditent {

// Half-integer spin stored as 2j. Dimension 2j+1 is capped at 16.
struct Spin {
  int two_j = 0;

  static Spin from_two_j(int two_j);
  static Spin from_dimension(int dim); // dim = 2j+1

  int dimension() const { return two_j + 1; }
  double j() const { return 0.5 * two_j; }
  // Projection value of basis index 0..2j, ascending from -j.
  double m_of(int index) const { return -0.5 * two_j + index; }
};

// z-y-z convention.
struct EulerAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

// Spin-projection distribution along a direction: w(m) are the diagonal
// elements of the rotated density matrix, m ascending from -j.
struct Tomogram {
  Spin spin;
  double theta = 0.0;
  double phi = 0.0;
  ProbabilityVector w;
};

// Small Wigner d-matrix d^j_{m',m}(beta) = <m'| exp(-i beta J_y) |m>,
// rows/columns ordered by ascending projection. Entries are real; the
// returned matrix is orthogonal and satisfies d(b1) d(b2) = d(b1+b2).
CMatrix wigner_small_d(Spin spin, double beta);

// u = exp(-i alpha J_z) d(beta) exp(-i gamma J_z) with J_z = diag(m).
CMatrix rotation_unitary(Spin spin, const EulerAngles& angles);

// w(m) = <m| u rho u† |m> with (alpha, beta, gamma) = (phi, theta, 0), so
// theta = 0 returns the diagonal of rho.
Tomogram compute_tomogram(const DensityMatrix& rho, double theta, double phi);

enum class PresetKind { subadditivity, strong_subadditivity };
enum class PresetVariant { derived, printed };

// Tomogram-level inequality presets over indices m = -j..j (component k is
// w(m_k) with m ascending). Derived variants come from documented lattice
// placements and are guaranteed valid; printed variants transcribe published
// formulas verbatim and are audit-only.
GroupingSpec preset_grouping(Spin spin, PresetKind kind, PresetVariant variant);

}  // namespace quditent
