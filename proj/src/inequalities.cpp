#include "quditent/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "quditent/errors.hpp"
#include "quditent/numerics.hpp"

namespace quditent {

InequalityVerdict make_verdict(double lhs, double rhs, double tolerance) {
  InequalityVerdict v;
  v.lhs = lhs;
  v.rhs = rhs;
  v.gap = rhs - lhs;
  v.tolerance = tolerance;
  v.holds = v.gap >= -tolerance;
  return v;
}

namespace {

void require_arity(const IndexPlacement& placement, int arity, const char* what) {
  if (placement.shape.arity() != arity)
    fail(Errc::bad_axes, std::string(what) + " needs a placement with " + std::to_string(arity) + " axes");
}

double table_entropy(const JointTable& t) {
  return entropy_kernel(t.values, Tolerances::global().prob_entry_clip);
}

double marginal_entropy(const JointTable& t, const std::vector<int>& keep) {
  return entropy_kernel(marginal_table(t, keep).components, Tolerances::global().prob_entry_clip);
}

double reduced_entropy(const ShapedDensityMatrix& padded, const std::vector<int>& keep) {
  return von_neumann_entropy(partial_trace(padded, keep));
}

}  // namespace

InequalityVerdict subadditivity_classical(const ProbabilityVector& p, const IndexPlacement& placement,
                                          double tolerance) {
  require_arity(placement, 2, "subadditivity");
  const JointTable t = embed_vector(p, placement);
  const double h12 = table_entropy(t);
  const double h1 = marginal_entropy(t, {1});
  const double h2 = marginal_entropy(t, {2});
  return make_verdict(h12, h1 + h2, tolerance);
}

InequalityVerdict strong_subadditivity_classical(const ProbabilityVector& p, const IndexPlacement& placement,
                                                 double tolerance) {
  require_arity(placement, 3, "strong subadditivity");
  const JointTable t = embed_vector(p, placement);
  const double h123 = table_entropy(t);
  const double h2 = marginal_entropy(t, {2});
  const double h12 = marginal_entropy(t, {1, 2});
  const double h23 = marginal_entropy(t, {2, 3});
  return make_verdict(h123 + h2, h12 + h23, tolerance);
}

double shannon_information(const ProbabilityVector& p, const IndexPlacement& placement) {
  return subadditivity_classical(p, placement).gap;
}

InequalityVerdict subadditivity_quantum(const DensityMatrix& rho, const IndexPlacement& placement,
                                        double tolerance) {
  require_arity(placement, 2, "subadditivity");
  const ShapedDensityMatrix padded = embed_density(rho, placement);
  const double s12 = von_neumann_entropy(DensityMatrix{padded.m});
  const double s1 = reduced_entropy(padded, {1});
  const double s2 = reduced_entropy(padded, {2});
  return make_verdict(s12, s1 + s2, tolerance);
}

QuantumSsaResult strong_subadditivity_quantum(const DensityMatrix& rho, const IndexPlacement& placement,
                                              double tolerance) {
  require_arity(placement, 3, "strong subadditivity");
  const ShapedDensityMatrix padded = embed_density(rho, placement);
  QuantumSsaResult res;
  res.r12 = partial_trace(padded, {1, 2}).m;
  res.r23 = partial_trace(padded, {2, 3}).m;
  res.r2 = partial_trace(padded, {2}).m;
  const double s123 = von_neumann_entropy(DensityMatrix{padded.m});
  const double s2 = von_neumann_entropy(DensityMatrix{res.r2});
  const double s12 = von_neumann_entropy(DensityMatrix{res.r12});
  const double s23 = von_neumann_entropy(DensityMatrix{res.r23});
  res.verdict = make_verdict(s123 + s2, s12 + s23, tolerance);
  return res;
}

double quantum_cmi(const DensityMatrix& rho, const IndexPlacement& placement) {
  return strong_subadditivity_quantum(rho, placement).verdict.gap;
}

namespace {

template <typename Eval>
ScanReport scan_impl(int n, const IndexPlacement& placement, const ScanBudget& budget,
                     const RandomSource& rng, Eval&& evaluate) {
  ScanReport report;
  bool first = true;
  auto consider = [&](const std::vector<int>& sigma) {
    const double gap = evaluate(permuted_placement(placement, sigma));
    if (first || gap < report.min_gap) {
      report.min_gap = gap;
      report.argmin = sigma;
    }
    if (first || gap > report.max_gap) {
      report.max_gap = gap;
      report.argmax = sigma;
    }
    first = false;
    ++report.count;
  };

  std::vector<int> sigma(static_cast<size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);

  switch (budget.kind) {
    case ScanBudget::Kind::identity:
      consider(sigma);
      break;
    case ScanBudget::Kind::all: {
      double factorial = 1.0;
      for (int k = 2; k <= n; ++k) factorial *= k;
      if (factorial > 1e7)
        fail(Errc::budget_too_large, "exhaustive scan needs N! <= 1e7; " + std::to_string(n) + "! is too large");
      do {
        consider(sigma);
      } while (std::next_permutation(sigma.begin(), sigma.end()));
      break;
    }
    case ScanBudget::Kind::random: {
      if (budget.count < 1) fail(Errc::budget_too_large, "random budget needs at least one draw");
      std::mt19937_64 eng = rng.engine();
      for (long i = 0; i < budget.count; ++i) {
        std::vector<int> draw(static_cast<size_t>(n));
        std::iota(draw.begin(), draw.end(), 1);
        std::shuffle(draw.begin(), draw.end(), eng);
        consider(draw);
      }
      break;
    }
  }
  return report;
}

}  // namespace

ScanReport scan_permutations(const ProbabilityVector& p, const IndexPlacement& placement,
                             const ScanBudget& budget, const RandomSource& rng) {
  if (p.dimension() != placement.dimension())
    fail(Errc::dimension_mismatch, "vector dimension does not match the placement");
  const bool strong = placement.shape.arity() == 3;
  return scan_impl(p.dimension(), placement, budget, rng, [&](const IndexPlacement& pl) {
    return strong ? strong_subadditivity_classical(p, pl).gap : subadditivity_classical(p, pl).gap;
  });
}

ScanReport scan_permutations(const DensityMatrix& rho, const IndexPlacement& placement,
                             const ScanBudget& budget, const RandomSource& rng) {
  if (rho.dimension() != placement.dimension())
    fail(Errc::dimension_mismatch, "matrix dimension does not match the placement");
  const bool strong = placement.shape.arity() == 3;
  return scan_impl(rho.dimension(), placement, budget, rng, [&](const IndexPlacement& pl) {
    return strong ? strong_subadditivity_quantum(rho, pl).verdict.gap : subadditivity_quantum(rho, pl).gap;
  });
}

namespace {

double grouping_side(const ProbabilityVector& p, const std::vector<std::vector<std::vector<int>>>& families,
                     int n) {
  double side = 0.0;
  for (const auto& family : families) {
    std::vector<bool> used(static_cast<size_t>(n), false);
    for (const auto& group : family) {
      double sum = 0.0;
      for (int idx : group) {
        if (idx < 1 || idx > n)
          fail(Errc::index_out_of_range, "index " + std::to_string(idx) + " outside 1.." + std::to_string(n));
        if (used[static_cast<size_t>(idx - 1)])
          fail(Errc::overlapping_groups, "index " + std::to_string(idx) + " appears twice within a family");
        used[static_cast<size_t>(idx - 1)] = true;
        sum += p[idx - 1];
      }
      if (sum > 0.0) side -= sum * std::log(sum);
    }
  }
  return side;
}

}  // namespace

InequalityVerdict evaluate_grouping(const ProbabilityVector& p, const GroupingSpec& spec, double tolerance) {
  if (p.dimension() != spec.n)
    fail(Errc::dimension_mismatch, "vector dimension " + std::to_string(p.dimension()) +
                                       " does not match spec n = " + std::to_string(spec.n));
  const double lhs = grouping_side(p, spec.lhs, spec.n);
  const double rhs = grouping_side(p, spec.rhs, spec.n);
  return make_verdict(lhs, rhs, tolerance);
}

namespace {

// Component groups of each kept-lattice level, empty levels dropped, levels
// in flattened order, components within a group in ascending cell order so
// grouped sums accumulate in the same order the marginal tables do.
std::vector<std::vector<int>> groups_for_axes(const IndexPlacement& placement, const std::vector<int>& keep) {
  const std::vector<int> level_of = kept_level_map(placement.shape, keep);
  const int levels = 1 + *std::max_element(level_of.begin(), level_of.end());
  std::vector<std::vector<int>> by_level(static_cast<size_t>(levels));

  std::vector<int> order(placement.cells.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return placement.cells[static_cast<size_t>(a)] < placement.cells[static_cast<size_t>(b)]; });
  for (int k : order)
    by_level[static_cast<size_t>(level_of[static_cast<size_t>(placement.cells[static_cast<size_t>(k)])])].push_back(k + 1);

  std::vector<std::vector<int>> groups;
  for (auto& g : by_level)
    if (!g.empty()) groups.push_back(std::move(g));
  return groups;
}

}  // namespace

GroupingSpec grouping_from_placement(const IndexPlacement& placement, bool strong) {
  const int arity = placement.shape.arity();
  if (strong && arity != 3) fail(Errc::bad_axes, "strong subadditivity needs a tripartite placement");
  if (!strong && arity != 2) fail(Errc::bad_axes, "subadditivity needs a bipartite placement");

  GroupingSpec spec;
  spec.n = placement.dimension();
  std::vector<std::vector<int>> singletons;
  for (int k = 1; k <= spec.n; ++k) singletons.push_back({k});

  if (strong) {
    spec.lhs = {singletons, groups_for_axes(placement, {2})};
    spec.rhs = {groups_for_axes(placement, {1, 2}), groups_for_axes(placement, {2, 3})};
    spec.label = "strong-subadditivity";
  } else {
    spec.lhs = {singletons};
    spec.rhs = {groups_for_axes(placement, {1}), groups_for_axes(placement, {2})};
    spec.label = "subadditivity";
  }
  return spec;
}

FalsifyResult falsify(const GroupingSpec& spec, int n, long trials, const RandomSource& rng) {
  if (n != spec.n)
    fail(Errc::dimension_mismatch, "requested dimension " + std::to_string(n) +
                                       " does not match spec n = " + std::to_string(spec.n));
  if (trials < 0) fail(Errc::budget_too_large, "trials must be >= 0");

  const double violation = Tolerances::global().falsify_violation;
  FalsifyResult res;

  auto try_case = [&](const std::vector<double>& candidate, const std::string& label) {
    ++res.cases_evaluated;
    const ProbabilityVector p{candidate};
    const InequalityVerdict v = evaluate_grouping(p, spec);
    if (v.gap < -violation) {
      res.found = true;
      res.witness = candidate;
      res.verdict = v;
      res.case_label = label;
      return true;
    }
    return false;
  };

  // Low-entropy extremes expose grouping errors fastest.
  for (int k = 0; k < n; ++k) {
    std::vector<double> e(static_cast<size_t>(n), 0.0);
    e[static_cast<size_t>(k)] = 1.0;
    if (try_case(e, "basis:" + std::to_string(k + 1))) return res;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<double> e(static_cast<size_t>(n), 0.0);
      e[static_cast<size_t>(i)] = 0.5;
      e[static_cast<size_t>(j)] = 0.5;
      if (try_case(e, "pair:" + std::to_string(i + 1) + "," + std::to_string(j + 1))) return res;
    }

  std::mt19937_64 eng = rng.engine();
  for (long t = 0; t < trials; ++t) {
    const ProbabilityVector p = sample_probability_vector(n, eng);
    if (try_case(p.components, "random:" + std::to_string(t))) return res;
  }
  return res;
}

}  // namespace quditent
