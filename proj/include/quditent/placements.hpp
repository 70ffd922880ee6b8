#pragma once

#include <cstdint>
#include <vector>

#include "quditent/matrix.hpp"
#include "quditent/states.hpp"

namespace quditent {

// A padded index lattice with 2 or 3 axes. Axes are labeled 1..arity in the
// public API; cells are stored as flat row-major indices with axis 1 most
// significant, so the flat index of cell (a1, a2, a3) is ((a1*n2)+a2)*n3+a3
// with 0-based digits.
struct Shape {
  std::vector<int> dims;

  int arity() const { return static_cast<int>(dims.size()); }
  int total() const {
    int t = 1;
    for (int d : dims) t *= d;
    return t;
  }
  bool operator==(const Shape&) const = default;
};

// Decode a flat cell index into per-axis 0-based digits.
std::vector<int> cell_digits(const Shape& shape, int flat);
int cell_flat(const Shape& shape, const std::vector<int>& digits);

// Injective assignment of component indices 1..N into a padded lattice.
// cells[k] is the flat lattice cell of component k+1; unassigned cells are
// implicit exact zeros.
struct IndexPlacement {
  Shape shape;
  std::vector<int> cells;

  int dimension() const { return static_cast<int>(cells.size()); }
};

// Joint probability table over the full lattice, flat row-major. Cells that
// received no component are exactly 0.
struct JointTable {
  Shape shape;
  std::vector<double> values;
};

// Density matrix over the padded lattice together with its axis structure.
struct ShapedDensityMatrix {
  CMatrix m;
  Shape shape;
};

// Dense 0/1 matrix acting on row-major vectorizations: rows indexed by output
// entry pairs, columns by padded input entry pairs. Materialized only for
// padded dimension <= 16; the partial-trace path is the production route.
struct PortraitMatrix {
  int dim_in = 0;  // padded dimension
  int dim_out = 0; // product of kept-axis dimensions
  std::vector<std::uint8_t> bits; // (dim_out^2) x (dim_in^2), row-major

  std::uint8_t at(int row, int col) const {
    return bits[static_cast<size_t>(row) * dim_in * dim_in + col];
  }
};

// Component k-1 written big-endian in the mixed radix of the shape gives its
// cell, so component 1 occupies cell (1,1,1) and component n1*n2*n3 the last
// cell. Unassigned trailing cells stay empty when N < total.
IndexPlacement lex_placement(int n, const Shape& shape);

// Component k occupies the base placement's cell of sigma(k); sigma is a
// 1-based bijection on {1..N}.
IndexPlacement permuted_placement(const IndexPlacement& base, const std::vector<int>& sigma);

JointTable embed_vector(const ProbabilityVector& p, const IndexPlacement& placement);

// Sum over the dropped axes. keep_axes are 1-based labels, strictly
// ascending; the result is flattened row-major over the kept axes.
ProbabilityVector marginal_table(const JointTable& table, const std::vector<int>& keep_axes);

ShapedDensityMatrix embed_density(const DensityMatrix& rho, const IndexPlacement& placement);

DensityMatrix partial_trace(const ShapedDensityMatrix& rho, const std::vector<int>& keep_axes);

PortraitMatrix portrait_matrix(const IndexPlacement& placement, const std::vector<int>& keep_axes);

DensityMatrix apply_portrait(const PortraitMatrix& m, const DensityMatrix& rho,
                             const IndexPlacement& placement);

// For each full-lattice flat cell, the flat index of its kept-axes level.
std::vector<int> kept_level_map(const Shape& shape, const std::vector<int>& keep_axes);

// Levels of the kept lattice that receive at least one assigned component.
// Levels with none are structurally zero regardless of the input values.
std::vector<bool> occupied_levels(const IndexPlacement& placement, const std::vector<int>& keep_axes);

CMatrix compress_zero_levels(const CMatrix& m, const std::vector<bool>& keep_mask);
std::vector<double> compress_zero_levels(const std::vector<double>& v, const std::vector<bool>& keep_mask);

}  // namespace quditent
