#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "infoclust/brute.hpp"
#include "infoclust/error.hpp"
#include "infoclust/hierarchy.hpp"
#include "infoclust/io.hpp"
#include "infoclust/metrics.hpp"
#include "infoclust/psp.hpp"
#include "infoclust/reductions.hpp"
#include "infoclust/spot_check.hpp"

namespace infoclust::cli {

namespace {

struct RunConfig {
  std::string command;
  std::string input;
  std::string format;
  std::string log_base;
  std::size_t bins = 8;
  std::string sfm = "auto";
  double tol_eq = 1e-6;
  std::optional<double> gamma;
  std::optional<std::size_t> k;
  std::string shift;
  std::string output = "json";
  std::uint64_t seed = 1;
  std::string function = "default";
  std::string cluster;
  bool verify = false;
};

/// Oracle mismatch found by oracle-check.
class MismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path.empty()) throw InputError("--input is required");
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read input file '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

std::string infer_format(const RunConfig& cfg, const std::string& text) {
  if (!cfg.format.empty()) return cfg.format;
  const auto dot = cfg.input.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : cfg.input.substr(dot + 1);
  if (ext == "json") {
    const auto doc = Json::parse(text, nullptr, false);
    if (doc.is_object() && (doc.contains("table") || doc.contains("values"))) return "table";
    return "pmf";
  }
  if (ext == "hg" || ext == "edges" || ext == "txt") return "hypergraph";
  throw InputError("cannot infer the input format from '" + cfg.input + "'; pass --format");
}

std::optional<double> parse_log_base(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text == "e") return std::numbers::e;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || !(v > 0.0) || v == 1.0 || !std::isfinite(v)) {
    throw InputError("--log-base must be a positive number other than 1, or 'e'");
  }
  return v;
}

PspOptions psp_options(const RunConfig& cfg) {
  if (!(cfg.tol_eq > 0.0)) throw InputError("--tol-eq must be positive");
  PspOptions opts;
  opts.sfm.mode = parse_sfm_mode(cfg.sfm);
  opts.split_tol = cfg.tol_eq;
  return opts;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Json config_json(const RunConfig& cfg, const LoadedSource& src) {
  Json c;
  c["command"] = cfg.command;
  c["input"] = cfg.input;
  c["format"] = src.format;
  c["log_base"] = round_sig(src.oracle->log_base());
  c["bins"] = cfg.bins;
  c["sfm"] = cfg.sfm;
  c["tol_eq"] = cfg.tol_eq;
  c["seed"] = cfg.seed;
  if (cfg.function != "default") c["function"] = cfg.function;
  if (cfg.gamma) c["gamma"] = *cfg.gamma;
  if (cfg.k) c["k"] = *cfg.k;
  if (!cfg.shift.empty()) c["shift"] = cfg.shift;
  return c;
}

Json family_json(const SetFamily& family, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& s : family) out.push_back(subset_to_json(s, names));
  return out;
}

Json partition_json(const Partition& p, const std::vector<std::string>& names) {
  return family_json(p.blocks(), names);
}

/// The set function a command works on. Hypergraph inputs may use a cut
/// function instead of their entropy.
OraclePtr select_function(const LoadedSource& src, const std::string& function, const std::string& fallback) {
  const std::string f = function == "default" ? fallback : function;
  if (f == "entropy") return src.oracle;
  if (f != "in-cut" && f != "cut") throw InputError("--function must be entropy, in-cut or cut");
  if (!src.hypergraph) throw InputError("--function " + f + " needs a hypergraph input");
  return f == "in-cut" ? OraclePtr(hypergraph_in_cut(*src.hypergraph))
                       : OraclePtr(hypergraph_undirected_cut(*src.hypergraph));
}

void require_clusterable(const SubmodularOracle& h) {
  if (h.size() < 2) throw InputError("clustering needs at least two variables");
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

void require_json(const RunConfig& cfg) {
  if (cfg.output != "json") throw InputError("--output dot is only available for cluster and chowliu");
}

Subset parse_name_list(const std::string& text, const std::vector<std::string>& names) {
  Json list = Json::array();
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto it = std::find(names.begin(), names.end(), item);
    if (it == names.end()) throw InputError("unknown variable '" + item + "' in --cluster");
    list.push_back(item);
  }
  return subset_from_json(list, names);
}

int cmd_cluster(const RunConfig& cfg, const LoadedSource& src, const std::string& text, std::ostream& out) {
  const auto h = select_function(src, cfg.function, "entropy");
  require_clusterable(*h);
  const auto solution = compute_psp(*h, psp_options(cfg));
  if (cfg.output == "dot") {
    out << solution_to_dot(solution, src.names);
    return kOk;
  }
  Json doc = solution_to_json(solution, src.names);
  if (cfg.gamma) doc["clusters_at_gamma"] = family_json(clusters_at(solution, *cfg.gamma), src.names);
  doc["provenance"] = {{"input_hash", hex64(fnv1a(text))}, {"config", config_json(cfg, src)}};
  emit(out, doc);
  return kOk;
}

int cmd_mmi(const RunConfig& cfg, const LoadedSource& src, std::ostream& out) {
  require_json(cfg);
  const auto h = select_function(src, cfg.function, "entropy");
  require_clusterable(*h);
  const auto r = mmi(*h, psp_options(cfg));
  Json doc;
  doc["mmi"] = round_sig(r.value);
  doc["fundamental_partition"] = partition_json(r.partition, src.names);
  doc["log_base"] = round_sig(h->log_base());
  doc["config"] = config_json(cfg, src);
  emit(out, doc);
  return kOk;
}

int cmd_segregation(const RunConfig& cfg, const LoadedSource& src, std::ostream& out) {
  require_json(cfg);
  const auto h = select_function(src, cfg.function, "entropy");
  require_clusterable(*h);
  const auto solution = compute_psp(*h, psp_options(cfg));
  Json doc;
  doc["integration"] = round_sig(solution.critical_values.front());
  if (!cfg.cluster.empty()) {
    const auto c = parse_name_list(cfg.cluster, src.names);
    doc["cluster"] = subset_to_json(c, src.names);
    doc["segregation"] = round_sig(segregation(solution, c));
  } else {
    const auto report = segregation_report(solution);
    Json entries = Json::array();
    for (const auto& e : report.entries) {
      entries.push_back({{"set", subset_to_json(e.cluster, src.names)}, {"segregation", round_sig(e.value)}});
    }
    doc["clusters"] = entries;
    if (!report.entries.empty()) {
      doc["min"] = round_sig(report.min);
      doc["max"] = round_sig(report.max);
      doc["mean"] = round_sig(report.mean);
    }
  }
  doc["config"] = config_json(cfg, src);
  emit(out, doc);
  return kOk;
}

Json graph_json(const WeightedGraph& g, const std::vector<std::string>& names) {
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"u", names.at(e.u)}, {"v", names.at(e.v)}, {"weight", round_sig(e.weight)}});
  }
  return edges;
}

int cmd_mirn(const RunConfig& cfg, const LoadedSource& src, std::ostream& out) {
  require_json(cfg);
  require_clusterable(*src.oracle);
  if (!cfg.gamma) throw InputError("mirn needs --gamma");
  const auto mirn = build_mirn(*src.oracle);
  Json doc;
  doc["gamma"] = *cfg.gamma;
  doc["clusters"] = family_json(mirn_clusters(mirn, *cfg.gamma), src.names);
  doc["edges"] = graph_json(mirn, src.names);
  if (cfg.verify) {
    if (!src.discrete) throw InputError("--verify needs a pmf or samples input");
    const auto report = verify_mirn_equivalence(*src.discrete, psp_options(cfg));
    doc["equivalence"] = {{"ok", report.ok()}, {"thresholds", report.thresholds.size()}, {"mismatches", report.mismatches}};
    if (!report.ok()) {
      emit(out, doc);
      throw MismatchError("MIRN and Chow-Liu tree clusters differ");
    }
  }
  doc["config"] = config_json(cfg, src);
  emit(out, doc);
  return kOk;
}

int cmd_chowliu(const RunConfig& cfg, const LoadedSource& src, std::ostream& out) {
  require_clusterable(*src.oracle);
  const auto tree = chow_liu_tree(build_mirn(*src.oracle));
  const auto solution = tree_source_solution(tree, src.oracle->log_base());
  if (cfg.output == "dot") {
    out << solution_to_dot(solution, src.names);
    return kOk;
  }
  Json doc;
  doc["tree"] = graph_json(tree, src.names);
  doc["tree_weight"] = round_sig([&] {
    double s = 0.0;
    for (const auto& e : tree.edges) s += e.weight;
    return s;
  }());
  doc["tree_solution"] = solution_to_json(solution, src.names);
  if (cfg.gamma) doc["clusters_at_gamma"] = family_json(clusters_at(solution, *cfg.gamma), src.names);
  doc["config"] = config_json(cfg, src);
  emit(out, doc);
  return kOk;
}

int cmd_mac(const RunConfig& cfg, const LoadedSource& src, std::ostream& out) {
  require_json(cfg);
  if (!cfg.k) throw InputError("mac needs --k");
  const auto base = select_function(src, cfg.function, src.hypergraph ? "in-cut" : "entropy");
  require_clusterable(*base);
  double shift = 0.0;
  if (cfg.shift == "hV") {
    shift = (*base)(Subset::full(base->size()));
  } else if (!cfg.shift.empty()) {
    char* end = nullptr;
    shift = std::strtod(cfg.shift.c_str(), &end);
    if (end != cfg.shift.c_str() + cfg.shift.size() || !std::isfinite(shift)) {
      throw InputError("--shift must be a number or 'hV'");
    }
  }
  const AffineOracle f(base, 1.0, 0.0, -shift);
  const auto opts = psp_options(cfg);
  const auto r = mac_clustering(f, *cfg.k, opts.sfm);
  Json doc;
  doc["k"] = *cfg.k;
  doc["shift"] = round_sig(shift);
  doc["cost"] = round_sig(r.cost);
  doc["partition"] = partition_json(r.partition, src.names);
  doc["exhaustive"] = r.exhaustive;
  const auto solution = compute_psp(*base, opts);
  doc["psp_partition"] = partition_json(psp_partition_for_k(solution, *cfg.k), src.names);
  doc["config"] = config_json(cfg, src);
  emit(out, doc);
  return kOk;
}

struct Check {
  std::string name;
  bool ok = false;
  double margin = 0.0;
  std::string detail;
};

template <typename F>
Check run_check(const std::string& name, F&& f) {
  Check c;
  c.name = name;
  try {
    f(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail = e.what();
  }
  return c;
}

std::vector<ClusterRecord> sorted_records(std::vector<ClusterRecord> r) {
  std::sort(r.begin(), r.end(), [](const ClusterRecord& a, const ClusterRecord& b) { return a.set < b.set; });
  return r;
}

void compare_records(Check& c, const std::vector<ClusterRecord>& expected, const std::vector<ClusterRecord>& got) {
  const auto a = sorted_records(expected);
  const auto b = sorted_records(got);
  c.ok = a.size() == b.size();
  if (!c.ok) {
    c.detail = std::to_string(a.size()) + " vs " + std::to_string(b.size()) + " clusters";
    return;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].set != b[i].set) {
      c.ok = false;
      c.detail = "cluster " + a[i].set.to_string() + " vs " + b[i].set.to_string();
      return;
    }
    c.margin = std::max(c.margin, std::abs(a[i].value - b[i].value));
  }
  c.ok = c.margin <= 1e-7;
  if (!c.ok) c.detail = "cluster values differ";
}

int cmd_oracle_check(const RunConfig& cfg, const LoadedSource& src, std::ostream& out) {
  require_json(cfg);
  const auto h = select_function(src, cfg.function, "entropy");
  require_clusterable(*h);
  if (h->size() > 10) throw InputError("oracle-check is limited to 10 variables");
  const auto opts = psp_options(cfg);
  std::vector<Check> checks;

  checks.push_back(run_check("submodularity", [&](Check& c) {
    SpotCheckOptions so;
    so.exhaustive = true;
    so.seed = cfg.seed;
    const auto r = submodularity_spot_check(*h, so);
    c.ok = r.ok();
    for (const auto& v : r.violations) c.margin = std::min(c.margin, v.margin);
    if (!c.ok) c.detail = std::to_string(r.violations.size()) + " violated pairs, first " +
                          r.violations.front().b1.to_string() + ", " + r.violations.front().b2.to_string();
  }));

  std::optional<ClusteringSolution> solution;
  checks.push_back(run_check("mmi", [&](Check& c) {
    const auto brute = brute_mmi(*h);
    const auto fast = mmi(*h, opts);
    c.margin = std::abs(brute.value - fast.value);
    c.ok = c.margin <= 1e-7 && brute.partition == fast.partition;
    if (!c.ok) c.detail = "brute " + brute.partition.to_string() + ", solver " + fast.partition.to_string();
  }));
  checks.push_back(run_check("psp_clusters", [&](Check& c) {
    solution = compute_psp(*h, opts);
    compare_records(c, brute_clusters(*h), solution->clusters());
  }));
  checks.push_back(run_check("iterative_clusters", [&](Check& c) {
    compare_records(c, brute_clusters(*h), clusters_iterative(*h, opts));
  }));
  checks.push_back(run_check("critical_values", [&](Check& c) {
    if (!solution) throw SolverError("no solution to check");
    c.ok = critical_values_match(*h, *solution);
    if (!c.ok) c.detail = "critical values differ from cluster MMI values";
  }));
  checks.push_back(run_check("recursion", [&](Check& c) {
    if (!solution) throw SolverError("no solution to check");
    const auto r = verify_theorem_xi(*h, *solution);
    c.ok = r.ok();
    if (!c.ok) c.detail = r.violations.front();
  }));

  bool all = true;
  Json list = Json::array();
  for (const auto& c : checks) {
    all = all && c.ok;
    Json j{{"check", c.name}, {"ok", c.ok}, {"margin", round_sig(c.margin)}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    list.push_back(j);
  }
  Json doc{{"ok", all}, {"checks", list}, {"config", config_json(cfg, src)}};
  emit(out, doc);
  if (!all) {
    std::string failed;
    for (const auto& c : checks) {
      if (!c.ok) failed += (failed.empty() ? "" : ", ") + c.name;
    }
    throw MismatchError("oracle check failed: " + failed);
  }
  return kOk;
}

void add_common(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--input", cfg.input, "Input file ('-' for stdin)")->required();
  sub.add_option("--format", cfg.format, "pmf, cov, hypergraph, samples or table")
      ->check(CLI::IsMember({"pmf", "cov", "hypergraph", "samples", "table"}));
  sub.add_option("--log-base", cfg.log_base, "Logarithm base (number or 'e')");
  sub.add_option("--bins", cfg.bins, "Quantization bins for samples")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  sub.add_option("--sfm", cfg.sfm, "SFM mode")->check(CLI::IsMember({"auto", "exhaustive", "mnp"}));
  sub.add_option("--tol-eq", cfg.tol_eq, "Turning-point equality tolerance");
  sub.add_option("--seed", cfg.seed, "Seed for sampled checks");
  sub.add_option("--function", cfg.function, "Hypergraph set function: entropy, in-cut or cut")
      ->check(CLI::IsMember({"default", "entropy", "in-cut", "cut"}));
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  const std::string text = read_input(cfg.input);
  LoadOptions lo;
  lo.log_base = parse_log_base(cfg.log_base);
  lo.bins = cfg.bins;
  const auto src = load_source(text, infer_format(cfg, text), lo);
  if (cfg.command == "cluster") return cmd_cluster(cfg, src, text, out);
  if (cfg.command == "mmi") return cmd_mmi(cfg, src, out);
  if (cfg.command == "segregation") return cmd_segregation(cfg, src, out);
  if (cfg.command == "mirn") return cmd_mirn(cfg, src, out);
  if (cfg.command == "chowliu") return cmd_chowliu(cfg, src, out);
  if (cfg.command == "mac") return cmd_mac(cfg, src, out);
  if (cfg.command == "oracle-check") return cmd_oracle_check(cfg, src, out);
  throw InputError("unknown command '" + cfg.command + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Info-clustering of random variables by multivariate mutual information", "infoclust"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* cluster = app.add_subcommand("cluster", "Critical values, PSP chain and clusters");
  add_common(*cluster, cfg);
  cluster->add_option("--gamma", cfg.gamma, "Also list the clusters at this threshold");
  cluster->add_option("--output", cfg.output, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  auto* mmi_cmd = app.add_subcommand("mmi", "I(Z_V) and the fundamental partition");
  add_common(*mmi_cmd, cfg);

  auto* seg = app.add_subcommand("segregation", "Integration and segregation of the clusters");
  add_common(*seg, cfg);
  seg->add_option("--cluster", cfg.cluster, "Comma-separated variable names of one cluster");

  auto* mirn = app.add_subcommand("mirn", "Relevance-network clusters at a threshold");
  add_common(*mirn, cfg);
  mirn->add_option("--gamma", cfg.gamma, "Threshold")->required();
  mirn->add_flag("--verify", cfg.verify, "Check against the Chow-Liu tree source");

  auto* chowliu = app.add_subcommand("chowliu", "Chow-Liu tree and its clustering");
  add_common(*chowliu, cfg);
  chowliu->add_option("--gamma", cfg.gamma, "Also list the clusters at this threshold");
  chowliu->add_option("--output", cfg.output, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  auto* mac = app.add_subcommand("mac", "Minimum average cost clustering");
  add_common(*mac, cfg);
  mac->add_option("--k", cfg.k, "Cardinality floor")->required();
  mac->add_option("--shift", cfg.shift, "Per-block shift s (number or 'hV')");

  auto* check = app.add_subcommand("oracle-check", "Compare the solvers with brute force");
  add_common(*check, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    return dispatch(cfg, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << " (best bound " << e.best_bound() << ")\n";
    return kSolverError;
  } catch (const MismatchError& e) {
    err << e.what() << "\n";
    return kOracleMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace infoclust::cli
