#pragma once

namespace quditent {

// Validation and verdict tolerances. A single mutable record; every operation
// reads the global instance unless handed an explicit override.
struct Tolerances {
  double hermiticity = 1e-10;       // max |A - A†| entrywise
  double trace_one = 1e-9;          // |Tr rho - 1|
  double psd_floor = 1e-10;         // min eigenvalue >= -psd_floor
  double eigen_clip = 1e-10;        // eigenvalues in [-clip, 0) clamp to 0
  double prob_entry_clip = 1e-12;   // vector entries in [-clip, 0) clamp to 0
  double prob_sum = 1e-9;           // |sum p - 1|
  double classical_verdict = 1e-12; // holds <=> gap >= -tolerance
  double quantum_verdict = 1e-9;    // eigensolver noise dominates this path
  double portrait_match = 1e-13;    // portrait vs partial-trace agreement
  double falsify_violation = 1e-6;  // gap below -this counts as a violation

  static Tolerances& global();
};

}  // namespace quditent
