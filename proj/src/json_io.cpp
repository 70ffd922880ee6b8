#include "quditent/json_io.hpp"

#include <fstream>
#include <sstream>

#include "quditent/errors.hpp"

namespace quditent {

using nlohmann::json;

namespace {

json complex_to_json(const cx& v) { return json::array({v.real(), v.imag()}); }

cx complex_from_json(const json& j) {
  if (j.is_number()) return cx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return cx(j[0].get<double>(), j[1].get<double>());
  fail(Errc::parse_error, "complex entries must be numbers or [re, im] pairs");
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) fail(Errc::parse_error, std::string("missing field \"") + name + "\"");
  return *it;
}

}  // namespace

json to_json(const CMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < m.cols(); ++j2) row.push_back(complex_to_json(m(i, j2)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) fail(Errc::parse_error, "matrix must be a nonempty nested array");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[static_cast<size_t>(i)].is_array() || static_cast<int>(j[static_cast<size_t>(i)].size()) != cols)
      fail(Errc::parse_error, "matrix rows must be arrays of equal length");
    for (int k = 0; k < cols; ++k)
      m(i, k) = complex_from_json(j[static_cast<size_t>(i)][static_cast<size_t>(k)]);
  }
  return m;
}

json to_json(const ProbabilityVector& p) {
  return json{{"kind", "probability_vector"}, {"n", p.dimension()}, {"p", p.components}};
}

ProbabilityVector probability_vector_from_json(const json& j) {
  const json* arr = &j;
  if (j.is_object()) arr = &field(j, "p");
  if (!arr->is_array()) fail(Errc::parse_error, "probability vector must be an array of numbers");
  std::vector<double> raw;
  for (const auto& v : *arr) {
    if (!v.is_number()) fail(Errc::parse_error, "probability vector entries must be numbers");
    raw.push_back(v.get<double>());
  }
  return validate_probability_vector(std::move(raw));
}

json to_json(const DensityMatrix& rho) {
  return json{{"kind", "density_matrix"}, {"n", rho.dimension()}, {"rho", to_json(rho.m)}};
}

DensityMatrix density_matrix_from_json(const json& j) {
  const json* arr = &j;
  if (j.is_object()) arr = &field(j, "rho");
  return validate_density_matrix(matrix_from_json(*arr));
}

json to_json(const IndexPlacement& placement) {
  json assignment = json::array();
  for (int cell : placement.cells) {
    json digits = json::array();
    for (int d : cell_digits(placement.shape, cell)) digits.push_back(d + 1);
    assignment.push_back(std::move(digits));
  }
  return json{{"shape", placement.shape.dims}, {"assignment", std::move(assignment)}};
}

IndexPlacement placement_from_json(const json& j, int n_hint) {
  if (!j.is_object()) fail(Errc::parse_error, "placement must be a JSON object");
  Shape shape;
  for (const auto& d : field(j, "shape")) {
    if (!d.is_number_integer()) fail(Errc::parse_error, "shape entries must be integers");
    shape.dims.push_back(d.get<int>());
  }
  auto it = j.find("assignment");
  if (it == j.end() || it->is_null()) return lex_placement(n_hint, shape);

  IndexPlacement pl = lex_placement(static_cast<int>(it->size()), shape);
  std::vector<bool> seen(static_cast<size_t>(shape.total()), false);
  for (size_t k = 0; k < it->size(); ++k) {
    const json& cell = (*it)[k];
    if (!cell.is_array() || static_cast<int>(cell.size()) != shape.arity())
      fail(Errc::parse_error, "assignment cells must list one 1-based index per axis");
    std::vector<int> digits;
    for (int a = 0; a < shape.arity(); ++a) {
      const int v = cell[static_cast<size_t>(a)].get<int>();
      if (v < 1 || v > shape.dims[static_cast<size_t>(a)])
        fail(Errc::parse_error, "cell index " + std::to_string(v) + " outside axis " + std::to_string(a + 1));
      digits.push_back(v - 1);
    }
    const int flat = cell_flat(shape, digits);
    if (seen[static_cast<size_t>(flat)]) fail(Errc::parse_error, "assignment is not injective");
    seen[static_cast<size_t>(flat)] = true;
    pl.cells[k] = flat;
  }
  return pl;
}

json to_json(const GroupingSpec& spec) {
  json j{{"n", spec.n}, {"lhs", spec.lhs}, {"rhs", spec.rhs}};
  if (!spec.label.empty()) j["label"] = spec.label;
  if (spec.audit_only) j["audit_only"] = true;
  return j;
}

GroupingSpec grouping_from_json(const json& j) {
  if (!j.is_object()) fail(Errc::parse_error, "grouping spec must be a JSON object");
  GroupingSpec spec;
  const json& n = field(j, "n");
  if (!n.is_number_integer()) fail(Errc::parse_error, "\"n\" must be an integer");
  spec.n = n.get<int>();

  auto read_side = [&](const char* name) {
    std::vector<std::vector<std::vector<int>>> families;
    for (const auto& fam : field(j, name)) {
      std::vector<std::vector<int>> groups;
      for (const auto& group : fam) {
        std::vector<int> idx;
        for (const auto& v : group) {
          if (!v.is_number_integer()) fail(Errc::parse_error, "group entries must be integers");
          idx.push_back(v.get<int>());
        }
        groups.push_back(std::move(idx));
      }
      families.push_back(std::move(groups));
    }
    return families;
  };
  spec.lhs = read_side("lhs");
  spec.rhs = read_side("rhs");
  if (auto it = j.find("label"); it != j.end()) spec.label = it->get<std::string>();
  if (auto it = j.find("audit_only"); it != j.end()) spec.audit_only = it->get<bool>();
  return spec;
}

json to_json(const InequalityVerdict& v) {
  return json{{"lhs", v.lhs}, {"rhs", v.rhs}, {"gap", v.gap}, {"holds", v.holds}, {"tolerance", v.tolerance}};
}

json to_json(const Tomogram& t) {
  return json{{"j", t.spin.j()}, {"theta", t.theta}, {"phi", t.phi}, {"w", t.w.components}};
}

Shape parse_shape_string(const std::string& text) {
  Shape shape;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    try {
      size_t pos = 0;
      const int v = std::stoi(part, &pos);
      if (pos != part.size() || v < 1) throw std::invalid_argument(part);
      shape.dims.push_back(v);
    } catch (const std::exception&) {
      fail(Errc::parse_error, "bad shape string \"" + text + "\" (expected e.g. 2x2x2)");
    }
  }
  if (shape.arity() != 2 && shape.arity() != 3)
    fail(Errc::parse_error, "shape string must name 2 or 3 axes");
  return shape;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    fail(Errc::parse_error, path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail(Errc::io_error, "cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
  if (!out) fail(Errc::io_error, "short write to " + path);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
  return std::string(buf);
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return fnv1a64_hex(ss.str());
}

}  // namespace quditent
