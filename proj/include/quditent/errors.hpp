#pragma once

#include <stdexcept>
#include <string>

namespace quditent {

// Every failure the library reports, one code per contract violation.
enum class Errc {
  non_square,
  non_hermitian,
  negative_input,
  negative_entry,
  not_normalized,
  trace_not_one,
  not_positive,
  bad_rank,
  zero_vector,
  shape_too_small,
  shape_too_large,
  not_a_permutation,
  dimension_mismatch,
  bad_axes,
  shape_mismatch,
  index_out_of_range,
  overlapping_groups,
  budget_too_large,
  bad_spin,
  bad_dimension,
  unsupported_spin,
  parse_error,
  io_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::non_square: return "NonSquare";
    case Errc::non_hermitian: return "NonHermitian";
    case Errc::negative_input: return "NegativeInput";
    case Errc::negative_entry: return "NegativeEntry";
    case Errc::not_normalized: return "NotNormalized";
    case Errc::trace_not_one: return "TraceNotOne";
    case Errc::not_positive: return "NotPositive";
    case Errc::bad_rank: return "BadRank";
    case Errc::zero_vector: return "ZeroVector";
    case Errc::shape_too_small: return "ShapeTooSmall";
    case Errc::shape_too_large: return "ShapeTooLarge";
    case Errc::not_a_permutation: return "NotAPermutation";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::bad_axes: return "BadAxes";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::overlapping_groups: return "OverlappingGroups";
    case Errc::budget_too_large: return "BudgetTooLarge";
    case Errc::bad_spin: return "BadSpin";
    case Errc::bad_dimension: return "BadDimension";
    case Errc::unsupported_spin: return "UnsupportedSpin";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace quditent
