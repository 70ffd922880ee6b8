#include "quditent/tomography.hpp"

#include <array>
#include <cmath>
#include <string>

#include "quditent/errors.hpp"
#include "quditent/placements.hpp"

namespace quditent {

Spin Spin::from_two_j(int two_j) {
  if (two_j < 0) fail(Errc::bad_spin, "2j must be nonnegative");
  if (two_j + 1 > 16) fail(Errc::bad_spin, "spins beyond dimension 16 are rejected");
  return Spin{two_j};
}

Spin Spin::from_dimension(int dim) {
  if (dim < 1) fail(Errc::bad_dimension, "dimension must be >= 1");
  if (dim > 16) fail(Errc::bad_spin, "spins beyond dimension 16 are rejected");
  return Spin{dim - 1};
}

namespace {

// Exact in double precision through 18!; we never need beyond (2j)! <= 15!.
double factorial(int n) {
  static const std::array<double, 21> table = [] {
    std::array<double, 21> f{};
    f[0] = 1.0;
    for (int i = 1; i <= 20; ++i) f[static_cast<size_t>(i)] = f[static_cast<size_t>(i - 1)] * i;
    return f;
  }();
  return table[static_cast<size_t>(n)];
}

}  // namespace

CMatrix wigner_small_d(Spin spin, double beta) {
  const int dim = spin.dimension();
  const int j2 = spin.two_j;
  const double cos_half = std::cos(0.5 * beta);
  const double sin_half = std::sin(0.5 * beta);

  CMatrix d(dim, dim);
  for (int row = 0; row < dim; ++row) {
    const int mp2 = 2 * row - j2; // 2m'
    for (int col = 0; col < dim; ++col) {
      const int m2 = 2 * col - j2; // 2m
      const int jpm = (j2 + m2) / 2;
      const int jmm = (j2 - m2) / 2;
      const int jpmp = (j2 + mp2) / 2;
      const int jmmp = (j2 - mp2) / 2;
      const double prefactor =
          std::sqrt(factorial(jpm) * factorial(jmm) * factorial(jpmp) * factorial(jmmp));

      const int mp_minus_m = (mp2 - m2) / 2;
      const int s_min = std::max(0, -mp_minus_m);
      const int s_max = std::min(jpm, jmmp);
      double sum = 0.0;
      for (int s = s_min; s <= s_max; ++s) {
        const double sign = ((mp_minus_m + s) % 2 == 0) ? 1.0 : -1.0;
        const double denom =
            factorial(jpm - s) * factorial(s) * factorial(mp_minus_m + s) * factorial(jmmp - s);
        const int cos_pow = j2 - mp_minus_m - 2 * s;
        const int sin_pow = mp_minus_m + 2 * s;
        sum += sign / denom * std::pow(cos_half, cos_pow) * std::pow(sin_half, sin_pow);
      }
      d(row, col) = prefactor * sum;
    }
  }
  return d;
}

CMatrix rotation_unitary(Spin spin, const EulerAngles& angles) {
  const int dim = spin.dimension();
  CMatrix u = wigner_small_d(spin, angles.beta);
  for (int row = 0; row < dim; ++row) {
    const cx left = std::exp(cx(0.0, -angles.alpha * spin.m_of(row)));
    for (int col = 0; col < dim; ++col) {
      const cx right = std::exp(cx(0.0, -angles.gamma * spin.m_of(col)));
      u(row, col) = left * u(row, col) * right;
    }
  }
  return u;
}

Tomogram compute_tomogram(const DensityMatrix& rho, double theta, double phi) {
  const Spin spin = Spin::from_dimension(rho.dimension());
  const CMatrix u = rotation_unitary(spin, {phi, theta, 0.0});
  const CMatrix rotated = u * rho.m * u.adjoint();
  std::vector<double> w(static_cast<size_t>(spin.dimension()));
  for (int m = 0; m < spin.dimension(); ++m) w[static_cast<size_t>(m)] = rotated(m, m).real();
  return Tomogram{spin, theta, phi, validate_probability_vector(std::move(w))};
}

namespace {

using Groups = std::vector<std::vector<int>>;

GroupingSpec make_spec(int n, std::vector<Groups> lhs, std::vector<Groups> rhs, std::string label,
                       bool audit_only) {
  GroupingSpec spec;
  spec.n = n;
  spec.lhs = std::move(lhs);
  spec.rhs = std::move(rhs);
  spec.label = std::move(label);
  spec.audit_only = audit_only;
  return spec;
}

Groups singletons(int n) {
  Groups g;
  for (int k = 1; k <= n; ++k) g.push_back({k});
  return g;
}

// The documented j=2 lattice: components 1..5 at cells (1,1) (1,2) (1,3)
// (2,1) (2,3) of a 2x3 grid, hole at (2,2).
IndexPlacement spin2_placement() {
  IndexPlacement pl;
  pl.shape = Shape{{2, 3}};
  pl.cells = {0, 1, 2, 3, 5};
  return pl;
}

}  // namespace

GroupingSpec preset_grouping(Spin spin, PresetKind kind, PresetVariant variant) {
  const bool printed = variant == PresetVariant::printed;

  if (spin.two_j == 6) { // j = 3, n = 7
    if (kind == PresetKind::strong_subadditivity) {
      if (!printed) {
        GroupingSpec spec = grouping_from_placement(lex_placement(7, Shape{{2, 2, 2}}), true);
        spec.label = "j3-ssa-derived";
        return spec;
      }
      // Published form: the common -p4 ln p4 and -p7 ln p7 terms are already
      // cancelled from both sides.
      return make_spec(7,
                       {{{1}, {2}, {3}, {5}, {6}}, {{3, 4, 7}, {1, 2, 5, 6}}},
                       {{{1, 2}, {3, 4}, {5, 6}}, {{1, 5}, {2, 6}, {3, 7}}},
                       "j3-ssa-printed", true);
    }
    if (!printed) {
      // The (1)|(2,3) split whose second family matches the published pair
      // groups.
      return make_spec(7,
                       {singletons(7)},
                       {{{1, 2, 3, 4}, {5, 6, 7}}, {{1, 5}, {2, 6}, {3, 7}, {4}}},
                       "j3-sub-derived", false);
    }
    // Published subadditivity: mixes the axis-2 triple/quad groups with the
    // (2,3) pair groups; no lattice bipartition yields both, and the formula
    // is violated at w(-3) = w(1) = 1/2.
    return make_spec(7,
                     {singletons(7)},
                     {{{1, 2, 5, 6}, {3, 4, 7}}, {{1, 5}, {2, 6}, {3, 7}, {4}}},
                     "j3-sub-printed", true);
  }

  if (spin.two_j == 4) { // j = 2, n = 5
    if (kind == PresetKind::subadditivity) {
      if (!printed) {
        GroupingSpec spec = grouping_from_placement(spin2_placement(), false);
        spec.label = "j2-sub-derived";
        return spec;
      }
      // Published form, cancelled -w(-1) ln w(-1) on both sides; the garbled
      // prefactor of the second group is read as its own ln argument.
      return make_spec(5,
                       {{{1}, {3}, {4}, {5}}},
                       {{{1, 2, 3}, {4, 5}}, {{1, 4}, {3, 5}}},
                       "j2-sub-printed", true);
    }
    if (!printed) {
      GroupingSpec spec = grouping_from_placement(lex_placement(5, Shape{{2, 2, 2}}), true);
      spec.label = "j2-ssa-derived";
      return spec;
    }
    fail(Errc::unsupported_spin, "no published j=2 strong-subadditivity tomogram formula");
  }

  fail(Errc::unsupported_spin, "presets exist for j = 2 and j = 3 only");
}

}  // namespace quditent
