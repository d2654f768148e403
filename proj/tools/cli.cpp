#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "effhull/efficiency.hpp"
#include "effhull/errors.hpp"
#include "effhull/experiments.hpp"
#include "effhull/generators.hpp"
#include "effhull/io.hpp"
#include "effhull/perturbed.hpp"

namespace effhull::cli {

namespace {

using nlohmann::ordered_json;

// Post-parse validation failure that maps to the usage exit code.
struct UsageError {
  std::string message;
};

ordered_json json_vector(const std::vector<double>& v) {
  auto arr = ordered_json::array();
  for (double x : v) arr.push_back(round12(x));
  return arr;
}

ordered_json json_indices_1based(const std::vector<int>& v) {
  auto arr = ordered_json::array();
  for (int i : v) arr.push_back(i + 1);
  return arr;
}

ordered_json json_matrix(const ReciprocalMatrix& A) {
  ordered_json m;
  m["n"] = A.size();
  auto rows = ordered_json::array();
  for (int i = 0; i < A.size(); ++i) {
    auto row = ordered_json::array();
    for (int j = 0; j < A.size(); ++j) row.push_back(round12(A(i, j)));
    rows.push_back(std::move(row));
  }
  m["rows"] = std::move(rows);
  return m;
}

ordered_json json_classification(const BlockClassification& cls) {
  ordered_json c;
  c["kind"] = to_string(cls.kind);
  c["block_indices"] = json_indices_1based(cls.block_indices);
  c["perturbed_pairs"] = cls.perturbed_pairs;
  switch (cls.kind) {
    case BlockKind::Simple:
      c["params"] = ordered_json{{"x", round12(cls.simple_x)}};
      break;
    case BlockKind::ThreeBlock:
      c["params"] = ordered_json{{"a12", round12(cls.three.a12)},
                                 {"a13", round12(cls.three.a13)},
                                 {"a23", round12(cls.three.a23)},
                                 {"cond_case", cls.three.cond_case}};
      break;
    case BlockKind::FourBlockTriangular:
      c["params"] = ordered_json{{"a13", round12(cls.triangular.a13)},
                                 {"a14", round12(cls.triangular.a14)},
                                 {"a24", round12(cls.triangular.a24)}};
      break;
    default:
      break;
  }
  ordered_json t;
  t["perm"] = json_indices_1based(cls.transform.perm());
  t["scale"] = json_vector(cls.transform.scale().entries());
  c["transform"] = std::move(t);
  c["canonical"] = json_matrix(cls.canonical);
  return c;
}

ordered_json json_witness(const WitnessResult& w) {
  ordered_json j;
  j["u"] = json_vector(w.coefficients);
  j["w"] = json_vector(w.w.entries());
  j["epsilon"] = round12(w.epsilon);
  return j;
}

struct GlobalOpts {
  ToleranceConfig tol;
  std::uint64_t seed = 0;
  long trials = -1;  // -1: use the subcommand default
  std::string out;

  void emit(const std::string& text) const {
    if (out.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
      write_text_file(out, text.empty() || text.back() == '\n' ? text : text + "\n");
    }
  }
};

int run_check(const GlobalOpts& g, const std::string& matrix_path, const std::string& vector_path,
              const std::string& method) {
  ReciprocalMatrix A = read_matrix(matrix_path, g.tol);
  PositiveVector w = read_positive_vector(vector_path);
  ordered_json out;
  out["n"] = A.size();
  bool efficient;
  if (method == "recursive") {
    efficient = is_efficient_recursive(A, w, g.tol);
    out["verdict"] = efficient ? "efficient" : "inefficient";
    out["method"] = "recursive";
  } else {
    EfficiencyCertificate cert = is_efficient(A, w, g.tol);
    efficient = cert.efficient();
    out["verdict"] = efficient ? "efficient" : "inefficient";
    out["method"] = "digraph";
    if (!efficient) out["witness"] = json_indices_1based(cert.witness);
  }
  g.emit(out.dump(2));
  return efficient ? 0 : 3;
}

int run_generate(const GlobalOpts& g, const std::string& matrix_path, const std::string& kind,
                 const std::string& alpha_path) {
  ReciprocalMatrix A = read_matrix(matrix_path, g.tol);
  std::optional<PositiveVector> result;
  if (kind == "perron") {
    result = perron_vector(A, g.tol).vector;
  } else if (kind == "singular") {
    result = singular_vector(A, g.tol);
  } else if (kind == "geomean") {
    result = mean_columns(A, MeanKind::Geometric);
  } else if (kind == "arith") {
    result = mean_columns(A, MeanKind::Arithmetic);
  } else if (kind == "convex" || kind == "wgm") {
    if (alpha_path.empty()) throw UsageError{"--alpha is required with --kind " + kind};
    WeightVector alpha = read_weight_vector(alpha_path);
    result = kind == "convex" ? convex_combination(A, alpha) : weighted_geometric_mean(A, alpha);
  } else {
    throw UsageError{"unknown --kind '" + kind + "'"};
  }
  g.emit(vector_csv(result->entries()));
  return 0;
}

int run_classify(const GlobalOpts& g, const std::string& matrix_path) {
  ReciprocalMatrix A = read_matrix(matrix_path, g.tol);
  g.emit(json_classification(detect_block_structure(A, g.tol)).dump(2));
  return 0;
}

int run_hull_test(const GlobalOpts& g, const std::string& matrix_path) {
  ReciprocalMatrix A = read_matrix(matrix_path, g.tol);
  HullVerdict verdict = hull_subset_efficient(A, g.tol);
  ordered_json out;
  out["contained"] = to_string(verdict.contained);
  out["reason"] = verdict.reason;
  out["classification"] = json_classification(verdict.classification);
  if (verdict.witness) out["witness"] = json_witness(*verdict.witness);
  g.emit(out.dump(2));
  return verdict.contained == Containment::No ? 3 : 0;
}

int run_witness(const GlobalOpts& g, const std::string& family, const std::vector<double>& params) {
  if (params.size() != 3) throw UsageError{"--params needs exactly three comma-separated numbers"};
  WitnessResult w = family == "3block" ? witness_3block(params[0], params[1], params[2], g.tol)
                                       : witness_triangular(params[0], params[1], params[2], g.tol);
  ordered_json cert;
  cert["family"] = family;
  if (family == "3block") {
    cert["params"] = ordered_json{{"a12", round12(params[0])}, {"a13", round12(params[1])}, {"a23", round12(params[2])}};
  } else {
    cert["params"] = ordered_json{{"a13", round12(params[0])}, {"a14", round12(params[1])}, {"a24", round12(params[2])}};
  }
  cert["epsilon"] = round12(w.epsilon);
  cert["u"] = json_vector(w.coefficients);
  cert["w"] = json_vector(w.w.entries());
  g.emit(vector_csv(w.w.entries()) + "\n" + cert.dump());
  return 0;
}

int run_table2(const GlobalOpts& g, const std::vector<int>& n_list, double a12, double a23,
               const std::vector<double>& a13_list) {
  long trials = g.trials < 0 ? 10000 : g.trials;
  ordered_json out;
  out["a12"] = round12(a12);
  out["a23"] = round12(a23);
  out["trials"] = trials;
  out["seed"] = g.seed;
  auto reports = ordered_json::array();
  for (int n : n_list) {
    CountReport report = inefficiency_count(n, a12, a23, a13_list, trials, g.seed, g.tol);
    ordered_json r;
    r["n"] = report.n;
    auto entries = ordered_json::array();
    for (const CountEntry& e : report.entries) {
      entries.push_back(ordered_json{{"a13", round12(e.a13)},
                                     {"trials", e.trials},
                                     {"inefficient_count", e.inefficient_count},
                                     {"perron_efficient", e.perron_efficient},
                                     {"singular_efficient", e.singular_efficient},
                                     {"arith_mean_efficient", e.arith_mean_efficient}});
    }
    r["entries"] = std::move(entries);
    reports.push_back(std::move(r));
  }
  out["reports"] = std::move(reports);
  g.emit(out.dump(2));
  return 0;
}

int run_compare(const GlobalOpts& g, const std::string& matrix_path) {
  long trials = g.trials < 0 ? 100 : g.trials;
  ReciprocalMatrix A = read_matrix(matrix_path, g.tol);
  ComparisonReport report = compare_run(A, trials, g.seed, g.tol, matrix_path);
  std::string csv = "trial,norm_convex,norm_geometric\n";
  for (const TrialRecord& rec : report.records) {
    csv += std::to_string(rec.trial) + "," + format_number(rec.divergence_convex) + "," +
           format_number(rec.divergence_geometric) + "\n";
  }
  ordered_json refs;
  refs["matrix"] = report.matrix_descriptor;
  refs["seed"] = report.seed;
  refs["trials"] = report.trials;
  refs["reference_norms"] = ordered_json{{"geometric_mean", round12(report.reference.geometric_mean)},
                                         {"perron", round12(report.reference.perron)},
                                         {"singular", round12(report.reference.singular)},
                                         {"arithmetic_mean", round12(report.reference.arithmetic_mean)}};
  if (g.out.empty()) {
    std::cout << csv << "\n" << refs.dump() << "\n";
  } else {
    write_text_file(g.out, csv);
    write_text_file(g.out + ".refs.json", refs.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int run(std::vector<std::string> args) {
  CLI::App app{"Pareto efficiency analysis for reciprocal pairwise-comparison matrices"};
  app.name("effhull");
  app.set_version_flag("--version", "effhull 1.0.0");
  app.require_subcommand(1);
  app.fallthrough(true);

  GlobalOpts g;
  app.add_option("--rtol", g.tol.rtol, "Relative tolerance for validation and closed forms");
  app.add_option("--edge-rtol", g.tol.edge_rtol, "Relative slack for dominance-digraph edges");
  app.add_option("--seed", g.seed, "Seed for randomized experiments");
  app.add_option("--trials", g.trials, "Trial count for randomized experiments");
  app.add_option("--out", g.out, "Write results to this file instead of stdout");

  std::string matrix_path, vector_path, alpha_path, method = "digraph", kind, family;
  std::vector<double> params, a13_list;
  std::vector<int> n_list;
  double a12 = 4.0, a23 = 2.0;

  CLI::App* check = app.add_subcommand("check", "Test Pareto efficiency of a weight vector");
  check->add_option("--matrix", matrix_path, "Matrix file (.csv or .json)")->required();
  check->add_option("--vector", vector_path, "Weight vector file (CSV)")->required();
  check->add_option("--method", method, "digraph | recursive")
      ->check(CLI::IsMember({"digraph", "recursive"}));

  CLI::App* generate = app.add_subcommand("generate", "Produce a weight vector from a matrix");
  generate->add_option("--matrix", matrix_path, "Matrix file")->required();
  generate->add_option("--kind", kind, "perron | singular | geomean | arith | convex | wgm")->required();
  generate->add_option("--alpha", alpha_path, "Coefficient vector file (convex / wgm)");

  CLI::App* classify = app.add_subcommand("classify", "Detect perturbed-block structure");
  classify->add_option("--matrix", matrix_path, "Matrix file")->required();

  CLI::App* hull = app.add_subcommand("hull-test", "Decide whether the hull of columns is all efficient");
  hull->add_option("--matrix", matrix_path, "Matrix file")->required();

  CLI::App* witness = app.add_subcommand("witness", "Construct an inefficient convex combination");
  witness->add_option("--family", family, "3block | triangular")
      ->required()
      ->check(CLI::IsMember({"3block", "triangular"}));
  witness->add_option("--params", params, "Three comma-separated family parameters")
      ->required()
      ->delimiter(',');

  CLI::App* experiment = app.add_subcommand("experiment", "Seeded Monte Carlo runs");
  experiment->require_subcommand(1);
  experiment->fallthrough(true);
  CLI::App* table2 = experiment->add_subcommand("table2", "Inefficiency counts over a parameter grid");
  table2->add_option("--n", n_list, "Dimensions, comma separated")->required()->delimiter(',');
  table2->add_option("--a12", a12, "First parameter");
  table2->add_option("--a23", a23, "Third parameter");
  table2->add_option("--a13", a13_list, "Corner parameter values, comma separated")->required()->delimiter(',');
  CLI::App* compare = experiment->add_subcommand("compare", "Convex vs geometric divergence per trial");
  compare->add_option("--matrix", matrix_path, "Matrix file")->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    g.tol.validate();
    if (app.got_subcommand(check)) return run_check(g, matrix_path, vector_path, method);
    if (app.got_subcommand(generate)) return run_generate(g, matrix_path, kind, alpha_path);
    if (app.got_subcommand(classify)) return run_classify(g, matrix_path);
    if (app.got_subcommand(hull)) return run_hull_test(g, matrix_path);
    if (app.got_subcommand(witness)) return run_witness(g, family, params);
    if (app.got_subcommand(experiment)) {
      if (experiment->got_subcommand(table2)) return run_table2(g, n_list, a12, a23, a13_list);
      if (experiment->got_subcommand(compare)) return run_compare(g, matrix_path);
    }
    std::cerr << "effhull: no subcommand selected\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "effhull: " << e.message << "\n";
    return 2;
  } catch (const HullContainedError& e) {
    std::cerr << "effhull: " << e.what() << "\n";
    return 3;
  } catch (const InvalidToleranceError& e) {
    std::cerr << "effhull: " << e.what() << "\n";
    return 2;
  } catch (const ConditionError& e) {
    std::cerr << "effhull: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "effhull: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "effhull: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "effhull: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace effhull::cli
