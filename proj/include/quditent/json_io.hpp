#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "quditent/inequalities.hpp"
#include "quditent/placements.hpp"
#include "quditent/states.hpp"
#include "quditent/tomography.hpp"

namespace quditent {

// JSON is the single interchange format: complex numbers are two-element
// [re, im] arrays, matrices are row-major nested arrays, lattice cells and
// component indices are 1-based as in the printed formulas.

nlohmann::json to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& j);

// {"kind": "probability_vector", "n": N, "p": [...]} ; readers also accept a
// bare array and validate either way.
nlohmann::json to_json(const ProbabilityVector& p);
ProbabilityVector probability_vector_from_json(const nlohmann::json& j);

// {"kind": "density_matrix", "n": N, "rho": [[[re,im],...],...]}
nlohmann::json to_json(const DensityMatrix& rho);
DensityMatrix density_matrix_from_json(const nlohmann::json& j);

// {"shape": [n1,n2,n3], "assignment": [[cell of k=1], ...]}; an omitted
// assignment means lexicographic, with the dimension taken from n_hint.
nlohmann::json to_json(const IndexPlacement& placement);
IndexPlacement placement_from_json(const nlohmann::json& j, int n_hint);

// {"n": N, "lhs": [[[indices]...]...], "rhs": [[[indices]...]...]} with
// optional "label" and "audit_only".
nlohmann::json to_json(const GroupingSpec& spec);
GroupingSpec grouping_from_json(const nlohmann::json& j);

nlohmann::json to_json(const InequalityVerdict& v);

// {"j": j, "theta": ..., "phi": ..., "w": [...]}
nlohmann::json to_json(const Tomogram& t);

// "2x2x2" -> Shape{{2,2,2}}
Shape parse_shape_string(const std::string& text);

nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);
std::string file_digest(const std::string& path);

}  // namespace quditent
