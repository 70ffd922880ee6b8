#include "quditent/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "quditent/errors.hpp"
#include "quditent/json_io.hpp"
#include "quditent/numerics.hpp"

namespace quditent {

using nlohmann::json;

namespace {

class ReportBuilder {
public:
  ReportBuilder(const std::string& command, const std::vector<std::string>& args)
      : start_(std::chrono::steady_clock::now()) {
    report_["command"] = command;
    report_["argv"] = args;
    report_["inputs"] = json::array();
  }

  void add_input(const std::string& path) {
    report_["inputs"].push_back({{"path", path}, {"fnv64", file_digest(path)}});
  }

  json& at() { return report_; }

  void add_verdict(const std::string& label, const InequalityVerdict& v) {
    json entry = to_json(v);
    entry["label"] = label;
    report_["verdicts"].push_back(std::move(entry));
  }

  // The digest covers everything except the timing, so identical inputs give
  // identical digests across runs.
  json finalize() {
    if (!report_.contains("verdicts")) report_["verdicts"] = json::array();
    report_["digest"] = fnv1a64_hex(report_.dump());
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    report_["timing_seconds"] = std::chrono::duration<double>(elapsed).count();
    return report_;
  }

private:
  json report_;
  std::chrono::steady_clock::time_point start_;
};

bool all_verdicts_hold(const json& report) {
  for (const auto& v : report["verdicts"])
    if (!v["holds"].get<bool>()) return false;
  return true;
}

void emit(ReportBuilder& builder, const std::string& output_path, std::ostream& out) {
  const json report = builder.finalize();
  out << report.dump(2) << "\n";
  if (!output_path.empty()) write_json_file(output_path, report);
}

IndexPlacement resolve_placement(const std::string& shape_str, const std::string& placement_path,
                                 int n, ReportBuilder& builder) {
  if (!shape_str.empty() && !placement_path.empty())
    fail(Errc::parse_error, "give either --shape or --placement, not both");
  if (!shape_str.empty()) return lex_placement(n, parse_shape_string(shape_str));
  if (!placement_path.empty()) {
    builder.add_input(placement_path);
    return placement_from_json(load_json_file(placement_path), n);
  }
  fail(Errc::parse_error, "a placement is required (--shape or --placement)");
}

ScanBudget parse_budget(const std::string& text) {
  if (text == "all") return ScanBudget::all();
  if (text == "identity") return ScanBudget::identity();
  if (text.rfind("random:", 0) == 0) {
    try {
      size_t pos = 0;
      const long count = std::stol(text.substr(7), &pos);
      if (pos == text.size() - 7 && count >= 1) return ScanBudget::random(count);
    } catch (const std::exception&) {
    }
  }
  fail(Errc::parse_error, "bad budget \"" + text + "\" (expected all, identity, or random:K)");
}

// Preset selection for tomogram-valued inputs: the published inequalities are
// subadditivity at j = 2 and strong subadditivity at j = 3.
GroupingSpec derived_preset_for_dimension(int n) {
  const Spin spin = Spin::from_dimension(n);
  if (n == 5) return preset_grouping(spin, PresetKind::subadditivity, PresetVariant::derived);
  if (n == 7) return preset_grouping(spin, PresetKind::strong_subadditivity, PresetVariant::derived);
  fail(Errc::unsupported_spin, "tomogram presets exist for dimensions 5 (j=2) and 7 (j=3)");
}

GroupingSpec preset_by_name(Spin spin, const std::string& kind) {
  if (kind == "sub-derived") return preset_grouping(spin, PresetKind::subadditivity, PresetVariant::derived);
  if (kind == "sub-printed") return preset_grouping(spin, PresetKind::subadditivity, PresetVariant::printed);
  if (kind == "ssa-derived")
    return preset_grouping(spin, PresetKind::strong_subadditivity, PresetVariant::derived);
  if (kind == "ssa-printed")
    return preset_grouping(spin, PresetKind::strong_subadditivity, PresetVariant::printed);
  fail(Errc::parse_error, "unknown preset kind \"" + kind +
                              "\" (expected sub-derived, sub-printed, ssa-derived, or ssa-printed)");
}

bool looks_like_density(const json& j) {
  if (j.is_object()) return j.contains("rho");
  return j.is_array() && !j.empty() && j[0].is_array() && !j[0].empty() && j[0][0].is_array();
}

struct CheckArgs {
  std::string mode, input, shape, placement, output;
  double tolerance = std::nan("");
};

int cmd_check(const CheckArgs& a, const std::vector<std::string>& argv, std::ostream& out) {
  ReportBuilder builder("check", argv);
  builder.add_input(a.input);
  const json input = load_json_file(a.input);

  if (a.mode == "classical") {
    const double tol = std::isnan(a.tolerance) ? Tolerances::global().classical_verdict : a.tolerance;
    const ProbabilityVector p = probability_vector_from_json(input);
    const IndexPlacement pl = resolve_placement(a.shape, a.placement, p.dimension(), builder);
    const bool strong = pl.shape.arity() == 3;
    const InequalityVerdict v = strong ? strong_subadditivity_classical(p, pl, tol)
                                       : subadditivity_classical(p, pl, tol);
    builder.add_verdict(strong ? "classical-ssa" : "classical-subadditivity", v);
    builder.at()["placement"] = to_json(pl);
    builder.at()["grouping"] = to_json(grouping_from_placement(pl, strong));
  } else if (a.mode == "quantum") {
    const double tol = std::isnan(a.tolerance) ? Tolerances::global().quantum_verdict : a.tolerance;
    const DensityMatrix rho = density_matrix_from_json(input);
    const IndexPlacement pl = resolve_placement(a.shape, a.placement, rho.dimension(), builder);
    const bool strong = pl.shape.arity() == 3;
    builder.at()["placement"] = to_json(pl);
    if (strong) {
      const QuantumSsaResult res = strong_subadditivity_quantum(rho, pl, tol);
      builder.add_verdict("quantum-ssa", res.verdict);
      builder.at()["reduced"] = {{"r12", to_json(res.r12)}, {"r23", to_json(res.r23)}, {"r2", to_json(res.r2)}};
    } else {
      builder.add_verdict("quantum-subadditivity", subadditivity_quantum(rho, pl, tol));
    }
  } else if (a.mode == "tomogram") {
    const double tol = std::isnan(a.tolerance) ? Tolerances::global().quantum_verdict : a.tolerance;
    const ProbabilityVector w = probability_vector_from_json(input);
    const GroupingSpec spec = derived_preset_for_dimension(w.dimension());
    builder.add_verdict(spec.label, evaluate_grouping(w, spec, tol));
    builder.at()["grouping"] = to_json(spec);
  } else {
    fail(Errc::parse_error, "unknown mode \"" + a.mode + "\"");
  }

  const bool ok = all_verdicts_hold(builder.at());
  emit(builder, a.output, out);
  return ok ? 0 : 1;
}

struct ScanArgs {
  std::string input, shape, placement, budget = "all", output;
  std::uint64_t seed = 0;
};

int cmd_scan(const ScanArgs& a, const std::vector<std::string>& argv, std::ostream& out) {
  ReportBuilder builder("scan", argv);
  builder.add_input(a.input);
  const json input = load_json_file(a.input);
  const ScanBudget budget = parse_budget(a.budget);
  const RandomSource rng{a.seed, 0};

  ScanReport scan;
  IndexPlacement pl;
  if (looks_like_density(input)) {
    const DensityMatrix rho = density_matrix_from_json(input);
    pl = resolve_placement(a.shape, a.placement, rho.dimension(), builder);
    scan = scan_permutations(rho, pl, budget, rng);
  } else {
    const ProbabilityVector p = probability_vector_from_json(input);
    pl = resolve_placement(a.shape, a.placement, p.dimension(), builder);
    scan = scan_permutations(p, pl, budget, rng);
  }

  builder.at()["seed"] = a.seed;
  builder.at()["placement"] = to_json(pl);
  builder.at()["scan"] = {{"budget", a.budget},
                          {"count", scan.count},
                          {"min_gap", scan.min_gap},
                          {"max_gap", scan.max_gap},
                          {"argmin", scan.argmin},
                          {"argmax", scan.argmax}};
  emit(builder, a.output, out);
  return 0;
}

struct FalsifyArgs {
  std::string spec, output;
  int n = 0;
  long trials = 1000;
  std::uint64_t seed = 0;
};

int cmd_falsify(const FalsifyArgs& a, const std::vector<std::string>& argv, std::ostream& out) {
  ReportBuilder builder("falsify", argv);
  builder.add_input(a.spec);
  const GroupingSpec spec = grouping_from_json(load_json_file(a.spec));
  const int n = a.n > 0 ? a.n : spec.n;
  const FalsifyResult res = falsify(spec, n, a.trials, RandomSource{a.seed, 0});

  builder.at()["seed"] = a.seed;
  builder.at()["grouping"] = to_json(spec);
  json f{{"found", res.found}, {"cases_evaluated", res.cases_evaluated}, {"trials", a.trials}};
  if (res.found) {
    f["witness"] = res.witness;
    f["case"] = res.case_label;
    f["verdict"] = to_json(res.verdict);
  }
  builder.at()["falsify"] = std::move(f);
  emit(builder, a.output, out);
  return 0;
}

struct TomogramArgs {
  std::string input, spec_kind, output;
  double theta = 0.0, phi = 0.0;
  double tolerance = std::nan("");
};

int cmd_tomogram(const TomogramArgs& a, const std::vector<std::string>& argv, std::ostream& out) {
  ReportBuilder builder("tomogram", argv);
  builder.add_input(a.input);
  const DensityMatrix rho = density_matrix_from_json(load_json_file(a.input));
  const Tomogram t = compute_tomogram(rho, a.theta, a.phi);
  builder.at()["tomogram"] = to_json(t);

  if (!a.spec_kind.empty()) {
    const double tol = std::isnan(a.tolerance) ? Tolerances::global().quantum_verdict : a.tolerance;
    if (rho.dimension() != 5 && rho.dimension() != 7)
      fail(Errc::unsupported_spin, "preset specs need dimension 5 (j=2) or 7 (j=3)");
    const GroupingSpec spec = preset_by_name(Spin::from_dimension(rho.dimension()), a.spec_kind);
    builder.add_verdict(spec.label, evaluate_grouping(t.w, spec, tol));
    builder.at()["grouping"] = to_json(spec);
  }
  emit(builder, a.output, out);
  return 0;
}

struct SampleArgs {
  std::string kind, out_prefix, output;
  int n = 0, rank = 0, count = 1;
  std::uint64_t seed = 0;
};

int cmd_sample(const SampleArgs& a, const std::vector<std::string>& argv, std::ostream& out) {
  ReportBuilder builder("sample", argv);
  builder.at()["seed"] = a.seed;
  json written = json::array();
  for (int i = 0; i < a.count; ++i) {
    const RandomSource rng{a.seed, static_cast<std::uint64_t>(i)};
    char suffix[32];
    std::snprintf(suffix, sizeof(suffix), "_%03d.json", i);
    const std::string path = a.out_prefix + suffix;
    if (a.kind == "vector") {
      write_json_file(path, to_json(sample_probability_vector(a.n, rng)));
    } else if (a.kind == "density") {
      const int rank = a.rank > 0 ? a.rank : a.n;
      write_json_file(path, to_json(sample_density_matrix(a.n, rank, rng)));
    } else {
      fail(Errc::parse_error, "unknown sample kind \"" + a.kind + "\"");
    }
    written.push_back(path);
  }
  builder.at()["samples"] = std::move(written);
  emit(builder, a.output, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entropic-inequality checker for qudit states"};
  app.require_subcommand(1);

  CheckArgs check;
  CLI::App* check_cmd = app.add_subcommand(
      "check", "Check the inequality a placement induces for one state");
  check_cmd->add_option("--mode", check.mode, "classical | quantum | tomogram")->required();
  check_cmd->add_option("--input", check.input, "state file (JSON)")->required();
  check_cmd->add_option("--shape", check.shape, "lexicographic placement, e.g. 2x2x2");
  check_cmd->add_option("--placement", check.placement, "placement file (JSON)");
  check_cmd->add_option("--tolerance", check.tolerance, "verdict tolerance");
  check_cmd->add_option("--output", check.output, "also write the report here");

  ScanArgs scan;
  CLI::App* scan_cmd = app.add_subcommand("scan", "Scan permutations of the components");
  scan_cmd->add_option("--input", scan.input, "state file (JSON)")->required();
  scan_cmd->add_option("--shape", scan.shape, "lexicographic placement, e.g. 2x2x2");
  scan_cmd->add_option("--placement", scan.placement, "placement file (JSON)");
  scan_cmd->add_option("--budget", scan.budget, "all | identity | random:K");
  scan_cmd->add_option("--seed", scan.seed, "random budget seed");
  scan_cmd->add_option("--output", scan.output, "also write the report here");

  FalsifyArgs falsify_args;
  CLI::App* falsify_cmd = app.add_subcommand("falsify", "Audit a grouping spec against corner cases and random draws");
  falsify_cmd->add_option("--spec", falsify_args.spec, "grouping spec file (JSON)")->required();
  falsify_cmd->add_option("--n", falsify_args.n, "dimension (defaults to the spec's n)");
  falsify_cmd->add_option("--trials", falsify_args.trials, "random trials after the corner cases");
  falsify_cmd->add_option("--seed", falsify_args.seed, "random trial seed");
  falsify_cmd->add_option("--output", falsify_args.output, "also write the report here");

  TomogramArgs tomo;
  CLI::App* tomo_cmd = app.add_subcommand("tomogram", "Compute a spin tomogram, optionally checking a preset");
  tomo_cmd->add_option("--input", tomo.input, "density matrix file (JSON)")->required();
  tomo_cmd->add_option("--theta", tomo.theta, "polar angle (radians)")->required();
  tomo_cmd->add_option("--phi", tomo.phi, "azimuthal angle (radians)")->required();
  tomo_cmd->add_option("--spec", tomo.spec_kind, "sub-derived | sub-printed | ssa-derived | ssa-printed");
  tomo_cmd->add_option("--tolerance", tomo.tolerance, "verdict tolerance");
  tomo_cmd->add_option("--output", tomo.output, "also write the report here");

  SampleArgs sample;
  CLI::App* sample_cmd = app.add_subcommand("sample", "Write random states to files");
  sample_cmd->add_option("--kind", sample.kind, "vector | density")->required();
  sample_cmd->add_option("--n", sample.n, "dimension")->required();
  sample_cmd->add_option("--rank", sample.rank, "Ginibre rank (defaults to n)");
  sample_cmd->add_option("--count", sample.count, "number of files");
  sample_cmd->add_option("--seed", sample.seed, "sampling seed");
  sample_cmd->add_option("--out", sample.out_prefix, "output file prefix")->required();
  sample_cmd->add_option("--output", sample.output, "also write the report here");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("quditent");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << (app.got_subcommand(check_cmd)     ? check_cmd->help()
            : app.got_subcommand(scan_cmd)    ? scan_cmd->help()
            : app.got_subcommand(falsify_cmd) ? falsify_cmd->help()
            : app.got_subcommand(tomo_cmd)    ? tomo_cmd->help()
            : app.got_subcommand(sample_cmd)  ? sample_cmd->help()
                                              : app.help());
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check_cmd->parsed()) return cmd_check(check, args, out);
    if (scan_cmd->parsed()) return cmd_scan(scan, args, out);
    if (falsify_cmd->parsed()) return cmd_falsify(falsify_args, args, out);
    if (tomo_cmd->parsed()) return cmd_tomogram(tomo, args, out);
    if (sample_cmd->parsed()) return cmd_sample(sample, args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace quditent
