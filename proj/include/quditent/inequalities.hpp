#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quditent/placements.hpp"
#include "quditent/states.hpp"
#include "quditent/tolerances.hpp"

namespace quditent {

// Uniform result record for every inequality check, oriented lhs <= rhs.
struct InequalityVerdict {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0; // rhs - lhs
  bool holds = false;
  double tolerance = 0.0;
};

InequalityVerdict make_verdict(double lhs, double rhs, double tolerance);

// A data-described inequality: each side is a list of index-group families
// over components 1..n, and a group G contributes -(sum_{k in G} p_k)
// ln(sum_{k in G} p_k) to its side. Groups within one family must be pairwise
// disjoint. Printed transcriptions that cannot be trusted carry audit_only.
struct GroupingSpec {
  int n = 0;
  std::vector<std::vector<std::vector<int>>> lhs;
  std::vector<std::vector<std::vector<int>>> rhs;
  std::string label;
  bool audit_only = false;
};

// --- placement-driven verdicts -------------------------------------------

// H(1,2) <= H(1) + H(2) for the embedded table of a bipartite placement.
InequalityVerdict subadditivity_classical(const ProbabilityVector& p, const IndexPlacement& placement,
                                          double tolerance = Tolerances::global().classical_verdict);

// H(1,2,3) + H(2) <= H(1,2) + H(2,3) for a tripartite placement.
InequalityVerdict strong_subadditivity_classical(const ProbabilityVector& p, const IndexPlacement& placement,
                                                 double tolerance = Tolerances::global().classical_verdict);

// I = H(1) + H(2) - H(1,2); equal to the subadditivity gap bit for bit.
double shannon_information(const ProbabilityVector& p, const IndexPlacement& placement);

InequalityVerdict subadditivity_quantum(const DensityMatrix& rho, const IndexPlacement& placement,
                                        double tolerance = Tolerances::global().quantum_verdict);

struct QuantumSsaResult {
  InequalityVerdict verdict;
  CMatrix r12; // keep axes (1,2)
  CMatrix r23; // keep axes (2,3)
  CMatrix r2;  // keep axis (2)
};

// S(rho) + S(R2) <= S(R12) + S(R23) for a tripartite placement; the three
// reduced matrices are returned uncompressed.
QuantumSsaResult strong_subadditivity_quantum(const DensityMatrix& rho, const IndexPlacement& placement,
                                              double tolerance = Tolerances::global().quantum_verdict);

// The strong-subadditivity gap S(R12) + S(R23) - S(rho) - S(R2).
double quantum_cmi(const DensityMatrix& rho, const IndexPlacement& placement);

// --- permutation scans -----------------------------------------------------

struct ScanBudget {
  enum class Kind { all, identity, random };
  Kind kind = Kind::all;
  long count = 0; // draws for Kind::random

  static ScanBudget all() { return {Kind::all, 0}; }
  static ScanBudget identity() { return {Kind::identity, 0}; }
  static ScanBudget random(long count) { return {Kind::random, count}; }
};

struct ScanReport {
  double min_gap = 0.0;
  double max_gap = 0.0;
  std::vector<int> argmin; // 1-based permutation
  std::vector<int> argmax;
  long count = 0;
};

// Evaluates the placement's inequality (subadditivity for bipartite shapes,
// strong subadditivity for tripartite) under permuted placements. Exhaustive
// scans iterate sigma in lexicographic order and require N! <= 10^7; ties go
// to the lexicographically smallest sigma.
ScanReport scan_permutations(const ProbabilityVector& p, const IndexPlacement& placement,
                             const ScanBudget& budget, const RandomSource& rng);
ScanReport scan_permutations(const DensityMatrix& rho, const IndexPlacement& placement,
                             const ScanBudget& budget, const RandomSource& rng);

// --- grouping specs ----------------------------------------------------------

InequalityVerdict evaluate_grouping(const ProbabilityVector& p, const GroupingSpec& spec,
                                    double tolerance = Tolerances::global().classical_verdict);

// The GroupingSpec a placement induces: joint-entropy singletons plus grouped
// marginals. strong = false gives H(1,2) <= H(1)+H(2); strong = true gives
// H(1,2,3)+H(2) <= H(1,2)+H(2,3). Reproduces the placement verdict.
GroupingSpec grouping_from_placement(const IndexPlacement& placement, bool strong);

struct FalsifyResult {
  bool found = false;
  std::vector<double> witness;
  InequalityVerdict verdict;
  std::string case_label;
  long cases_evaluated = 0;
};

// Audits a grouping spec: deterministic corner cases (basis vectors, all
// two-index half/half mixtures) followed by seeded simplex draws; returns the
// first input whose gap drops below -falsify_violation, if any.
FalsifyResult falsify(const GroupingSpec& spec, int n, long trials, const RandomSource& rng);

}  // namespace quditent
