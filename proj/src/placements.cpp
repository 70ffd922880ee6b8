#include "quditent/placements.hpp"

#include <algorithm>
#include <string>

#include "quditent/errors.hpp"

namespace quditent {

namespace {

void check_shape(const Shape& shape) {
  if (shape.arity() != 2 && shape.arity() != 3)
    fail(Errc::bad_axes, "shape must have 2 or 3 axes, got " + std::to_string(shape.arity()));
  for (int d : shape.dims)
    if (d < 1) fail(Errc::bad_axes, "axis dimension must be >= 1");
}

void check_keep_axes(const Shape& shape, const std::vector<int>& keep_axes) {
  if (keep_axes.empty()) fail(Errc::bad_axes, "keep-axes must be nonempty");
  if (static_cast<int>(keep_axes.size()) >= shape.arity())
    fail(Errc::bad_axes, "keep-axes must be a proper subset of the axes");
  int prev = 0;
  for (int a : keep_axes) {
    if (a < 1 || a > shape.arity()) fail(Errc::bad_axes, "axis label " + std::to_string(a) + " out of range");
    if (a <= prev) fail(Errc::bad_axes, "keep-axes must be strictly ascending");
    prev = a;
  }
}

// Flat offsets contributed by the kept and dropped digit groups. Both lists
// are strictly increasing, so iterating them in order walks the full lattice
// in ascending flat order for a fixed counterpart.
struct AxisSplit {
  std::vector<int> kept_offsets;
  std::vector<int> dropped_offsets;
  int kept_total = 1;
  int dropped_total = 1;
};

AxisSplit split_axes(const Shape& shape, const std::vector<int>& keep_axes) {
  check_keep_axes(shape, keep_axes);
  const int arity = shape.arity();
  std::vector<int> stride(static_cast<size_t>(arity), 1);
  for (int i = arity - 2; i >= 0; --i) stride[i] = stride[i + 1] * shape.dims[i + 1];

  std::vector<int> kept_axis, dropped_axis;
  for (int a = 1; a <= arity; ++a) {
    if (std::find(keep_axes.begin(), keep_axes.end(), a) != keep_axes.end())
      kept_axis.push_back(a - 1);
    else
      dropped_axis.push_back(a - 1);
  }

  auto offsets_of = [&](const std::vector<int>& axes) {
    std::vector<int> offs{0};
    for (int ax : axes) {
      std::vector<int> next;
      next.reserve(offs.size() * shape.dims[ax]);
      for (int o : offs)
        for (int d = 0; d < shape.dims[ax]; ++d) next.push_back(o + d * stride[ax]);
      offs = std::move(next);
    }
    return offs;
  };

  AxisSplit s;
  s.kept_offsets = offsets_of(kept_axis);
  s.dropped_offsets = offsets_of(dropped_axis);
  std::sort(s.dropped_offsets.begin(), s.dropped_offsets.end());
  s.kept_total = static_cast<int>(s.kept_offsets.size());
  s.dropped_total = static_cast<int>(s.dropped_offsets.size());
  return s;
}

}  // namespace

std::vector<int> cell_digits(const Shape& shape, int flat) {
  std::vector<int> digits(static_cast<size_t>(shape.arity()));
  for (int i = shape.arity() - 1; i >= 0; --i) {
    digits[i] = flat % shape.dims[i];
    flat /= shape.dims[i];
  }
  return digits;
}

int cell_flat(const Shape& shape, const std::vector<int>& digits) {
  int flat = 0;
  for (int i = 0; i < shape.arity(); ++i) flat = flat * shape.dims[i] + digits[i];
  return flat;
}

IndexPlacement lex_placement(int n, const Shape& shape) {
  check_shape(shape);
  if (n < 1) fail(Errc::dimension_mismatch, "dimension must be >= 1");
  if (n > shape.total())
    fail(Errc::shape_too_small, std::to_string(n) + " components do not fit a lattice of " +
                                    std::to_string(shape.total()) + " cells");
  IndexPlacement pl;
  pl.shape = shape;
  pl.cells.resize(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) pl.cells[k] = k;
  return pl;
}

IndexPlacement permuted_placement(const IndexPlacement& base, const std::vector<int>& sigma) {
  const int n = base.dimension();
  if (static_cast<int>(sigma.size()) != n)
    fail(Errc::not_a_permutation, "permutation length " + std::to_string(sigma.size()) +
                                      " does not match dimension " + std::to_string(n));
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int s : sigma) {
    if (s < 1 || s > n || seen[static_cast<size_t>(s - 1)])
      fail(Errc::not_a_permutation, "not a bijection on {1.." + std::to_string(n) + "}");
    seen[static_cast<size_t>(s - 1)] = true;
  }
  IndexPlacement pl;
  pl.shape = base.shape;
  pl.cells.resize(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) pl.cells[k] = base.cells[static_cast<size_t>(sigma[k] - 1)];
  return pl;
}

JointTable embed_vector(const ProbabilityVector& p, const IndexPlacement& placement) {
  if (p.dimension() != placement.dimension())
    fail(Errc::dimension_mismatch, "vector dimension " + std::to_string(p.dimension()) +
                                       " vs placement dimension " + std::to_string(placement.dimension()));
  JointTable table;
  table.shape = placement.shape;
  table.values.assign(static_cast<size_t>(placement.shape.total()), 0.0);
  for (int k = 0; k < p.dimension(); ++k) table.values[static_cast<size_t>(placement.cells[k])] = p[k];
  return table;
}

ProbabilityVector marginal_table(const JointTable& table, const std::vector<int>& keep_axes) {
  const AxisSplit s = split_axes(table.shape, keep_axes);
  std::vector<double> out(static_cast<size_t>(s.kept_total), 0.0);
  for (int ka = 0; ka < s.kept_total; ++ka)
    for (int d = 0; d < s.dropped_total; ++d)
      out[static_cast<size_t>(ka)] += table.values[static_cast<size_t>(s.kept_offsets[ka] + s.dropped_offsets[d])];
  return ProbabilityVector{std::move(out)};
}

ShapedDensityMatrix embed_density(const DensityMatrix& rho, const IndexPlacement& placement) {
  if (rho.dimension() != placement.dimension())
    fail(Errc::dimension_mismatch, "matrix dimension " + std::to_string(rho.dimension()) +
                                       " vs placement dimension " + std::to_string(placement.dimension()));
  const int total = placement.shape.total();
  ShapedDensityMatrix out{CMatrix(total, total), placement.shape};
  for (int j = 0; j < rho.dimension(); ++j)
    for (int k = 0; k < rho.dimension(); ++k)
      out.m(placement.cells[j], placement.cells[k]) = rho.m(j, k);
  return out;
}

DensityMatrix partial_trace(const ShapedDensityMatrix& rho, const std::vector<int>& keep_axes) {
  if (rho.m.rows() != rho.shape.total())
    fail(Errc::shape_mismatch, "matrix dimension does not match its shape");
  const AxisSplit s = split_axes(rho.shape, keep_axes);
  CMatrix out(s.kept_total, s.kept_total);
  for (int ka = 0; ka < s.kept_total; ++ka)
    for (int kb = 0; kb < s.kept_total; ++kb) {
      cx sum = 0.0;
      for (int d = 0; d < s.dropped_total; ++d)
        sum += rho.m(s.kept_offsets[ka] + s.dropped_offsets[d], s.kept_offsets[kb] + s.dropped_offsets[d]);
      out(ka, kb) = sum;
    }
  return DensityMatrix{std::move(out)};
}

PortraitMatrix portrait_matrix(const IndexPlacement& placement, const std::vector<int>& keep_axes) {
  const int total = placement.shape.total();
  if (total > 16)
    fail(Errc::shape_too_large, "portrait matrices are materialized only for padded dimension <= 16");
  const AxisSplit s = split_axes(placement.shape, keep_axes);
  PortraitMatrix m;
  m.dim_in = total;
  m.dim_out = s.kept_total;
  m.bits.assign(static_cast<size_t>(m.dim_out) * m.dim_out * total * total, 0);
  for (int ka = 0; ka < s.kept_total; ++ka)
    for (int kb = 0; kb < s.kept_total; ++kb) {
      const size_t row = static_cast<size_t>(ka) * s.kept_total + kb;
      for (int d = 0; d < s.dropped_total; ++d) {
        const int col_i = s.kept_offsets[ka] + s.dropped_offsets[d];
        const int col_j = s.kept_offsets[kb] + s.dropped_offsets[d];
        m.bits[row * total * total + static_cast<size_t>(col_i) * total + col_j] = 1;
      }
    }
  return m;
}

DensityMatrix apply_portrait(const PortraitMatrix& m, const DensityMatrix& rho,
                             const IndexPlacement& placement) {
  if (placement.shape.total() != m.dim_in)
    fail(Errc::shape_mismatch, "portrait expects padded dimension " + std::to_string(m.dim_in));
  if (rho.dimension() != placement.dimension())
    fail(Errc::shape_mismatch, "matrix dimension does not match the placement");
  const ShapedDensityMatrix padded = embed_density(rho, placement);
  const std::vector<cx>& vec = padded.m.data(); // row-major vectorization
  CMatrix out(m.dim_out, m.dim_out);
  const size_t cols = static_cast<size_t>(m.dim_in) * m.dim_in;
  for (int oi = 0; oi < m.dim_out; ++oi)
    for (int oj = 0; oj < m.dim_out; ++oj) {
      const size_t row = static_cast<size_t>(oi) * m.dim_out + oj;
      cx sum = 0.0;
      for (size_t c = 0; c < cols; ++c)
        if (m.bits[row * cols + c]) sum += vec[c];
      out(oi, oj) = sum;
    }
  return DensityMatrix{std::move(out)};
}

std::vector<int> kept_level_map(const Shape& shape, const std::vector<int>& keep_axes) {
  const AxisSplit s = split_axes(shape, keep_axes);
  std::vector<int> kept_of_flat(static_cast<size_t>(shape.total()), -1);
  for (int ka = 0; ka < s.kept_total; ++ka)
    for (int d = 0; d < s.dropped_total; ++d)
      kept_of_flat[static_cast<size_t>(s.kept_offsets[ka] + s.dropped_offsets[d])] = ka;
  return kept_of_flat;
}

std::vector<bool> occupied_levels(const IndexPlacement& placement, const std::vector<int>& keep_axes) {
  const std::vector<int> level_of = kept_level_map(placement.shape, keep_axes);
  const AxisSplit s = split_axes(placement.shape, keep_axes);
  std::vector<bool> occ(static_cast<size_t>(s.kept_total), false);
  for (int cell : placement.cells) occ[static_cast<size_t>(level_of[static_cast<size_t>(cell)])] = true;
  return occ;
}

CMatrix compress_zero_levels(const CMatrix& m, const std::vector<bool>& keep_mask) {
  if (static_cast<int>(keep_mask.size()) != m.rows() || !m.square())
    fail(Errc::shape_mismatch, "mask length does not match matrix dimension");
  std::vector<int> keep;
  for (int i = 0; i < m.rows(); ++i)
    if (keep_mask[static_cast<size_t>(i)]) keep.push_back(i);
  CMatrix out(static_cast<int>(keep.size()), static_cast<int>(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = 0; j < keep.size(); ++j) out(static_cast<int>(i), static_cast<int>(j)) = m(keep[i], keep[j]);
  return out;
}

std::vector<double> compress_zero_levels(const std::vector<double>& v, const std::vector<bool>& keep_mask) {
  if (keep_mask.size() != v.size()) fail(Errc::shape_mismatch, "mask length does not match vector length");
  std::vector<double> out;
  for (size_t i = 0; i < v.size(); ++i)
    if (keep_mask[i]) out.push_back(v[i]);
  return out;
}

}  // namespace quditent
