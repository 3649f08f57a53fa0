#include "oraclebench/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "oraclebench/errors.hpp"
#include "oraclebench/graph_iso.hpp"
#include "oraclebench/grover.hpp"
#include "oraclebench/identities.hpp"
#include "oraclebench/permutation.hpp"
#include "oraclebench/promise.hpp"

namespace oraclebench::cli {

namespace {

using Json = nlohmann::ordered_json;

// Usage or input problems that map to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string format;
};

std::uint64_t resolve_seed(const CommonOptions& opts) {
  if (opts.seed) return *opts.seed;
  if (const char* env = std::getenv("ORACLEBENCH_SEED"); env && *env) {
    std::uint64_t value = 0;
    std::istringstream in(env);
    if (!(in >> value) || !in.eof())
      throw UsageError(std::string("ORACLEBENCH_SEED is not an unsigned integer: ") + env);
    return value;
  }
  return kDefaultSeed;
}

// Shortest round-trip rendering, shared by CSV and JSON output.
std::string number(double v) { return Json(v).dump(); }

// Probabilities are reported to 12 decimal places.
double probability(double p) { return std::round(p * 1e12) / 1e12; }

void emit(const CommonOptions& opts, const std::string& text, std::ostream& out) {
  if (opts.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + opts.out_path);
  file << text;
}

void add_common(CLI::App& cmd, CommonOptions& opts, const std::string& default_format) {
  cmd.add_option("--seed", opts.seed, "Master seed (default: ORACLEBENCH_SEED or 1729)");
  cmd.add_option("--out", opts.out_path, "Write the report to this file instead of stdout");
  opts.format = default_format;
  cmd.add_option("--format", opts.format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

// ---------------------------------------------------------------------------

struct VerifyConfig {
  CommonOptions common;
  unsigned n = 3;
  std::string mode;
  std::string perm_path;
  bool inject_fault = false;
};

int cmd_verify_identities(const VerifyConfig& cfg, std::ostream& out) {
  if (cfg.n < 1 || cfg.n > kRandomStateCap)
    throw UsageError("--n must lie in 1.." + std::to_string(kRandomStateCap) +
                     " (cap " + std::to_string(kRandomStateCap) + ")");
  VerifyOptions options;
  if (cfg.mode.empty())
    options.mode = cfg.n <= kExhaustiveCap ? VerifyMode::ExhaustiveBasis
                                           : VerifyMode::RandomState;
  else
    options.mode = cfg.mode == "exhaustive" ? VerifyMode::ExhaustiveBasis
                                            : VerifyMode::RandomState;
  if (options.mode == VerifyMode::ExhaustiveBasis && cfg.n > kExhaustiveCap)
    throw UsageError("exhaustive mode is capped at n=" + std::to_string(kExhaustiveCap));

  const std::uint64_t seed = resolve_seed(cfg.common);
  options.seed = seed;
  options.inject_fault = cfg.inject_fault;
  Permutation perm = Permutation::random(cfg.n, seed);
  if (!cfg.perm_path.empty()) {
    perm = load_permutation(cfg.perm_path);
    if (perm.bits() != cfg.n)
      throw UsageError("permutation file has n=" + std::to_string(perm.bits()) +
                       " but --n is " + std::to_string(cfg.n));
  }

  std::ostringstream text;
  if (cfg.common.format == "csv")
    text << "identity,n,mode,inputs_checked,max_deviation,tolerance,queries_used,passed\n";
  bool all_passed = true;
  for (const auto& name : identity_names()) {
    const IdentityCheckResult r = verify_identity(name, perm, options);
    all_passed = all_passed && r.passed;
    if (cfg.common.format == "csv") {
      std::string queries;
      for (const auto& [oracle, count] : r.queries_used)
        queries += (queries.empty() ? "" : ";") + oracle + "=" + std::to_string(count);
      text << r.identity_name << ',' << r.n << ',' << to_string(r.mode) << ','
           << r.inputs_checked << ',' << number(r.max_deviation) << ','
           << number(r.tolerance) << ',' << queries << ',' << (r.passed ? "true" : "false")
           << '\n';
    } else {
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["identity"] = r.identity_name;
      j["n"] = r.n;
      j["mode"] = to_string(r.mode);
      j["seed"] = seed;
      j["inputs_checked"] = r.inputs_checked;
      j["max_deviation"] = r.max_deviation;
      j["tolerance"] = r.tolerance;
      j["queries_used"] = Json::object();
      for (const auto& [oracle, count] : r.queries_used) j["queries_used"][oracle] = count;
      j["passed"] = r.passed;
      text << j.dump() << '\n';
    }
  }
  emit(cfg.common, text.str(), out);
  return all_passed ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------

struct PromiseConfig {
  CommonOptions common;
  unsigned n = 4;
  std::size_t subset_size = 4;
  std::string case_name = "disjoint";
  std::uint64_t trials = 20;
};

inline constexpr unsigned kPromiseMaxN = 10;

int cmd_promise(const PromiseConfig& cfg, std::ostream& out) {
  if (cfg.n < 1 || cfg.n > kPromiseMaxN)
    throw UsageError("--n must lie in 1.." + std::to_string(kPromiseMaxN));
  if (cfg.trials < 1) throw UsageError("--trials must be at least 1");
  const BasisIndex N = BasisIndex{1} << cfg.n;
  const bool identical = cfg.case_name == "identical";
  const std::size_t max_subset = identical ? N : N / 2;
  if (cfg.subset_size < 1 || cfg.subset_size > max_subset)
    throw UsageError("--subset-size must lie in 1.." + std::to_string(max_subset) +
                     " for the " + cfg.case_name + " case at n=" + std::to_string(cfg.n));

  const std::uint64_t seed = resolve_seed(cfg.common);
  const PromiseInstance instance = identical
                                       ? make_identical_instance(cfg.n, cfg.subset_size, seed)
                                       : make_disjoint_instance(cfg.n, cfg.subset_size, seed);
  const Figure1Outcome exact = run_figure1_exact(instance);
  // trial t of the sampled run measures with seed + 1 + t
  const TrialSummary sampled = run_figure1_sampled(instance, cfg.trials, seed + 1);
  const double overlap = naive_standard_overlap(instance);

  const double expected_zero = identical ? 0.0 : 0.5;
  const bool ok = std::abs(exact.probabilities.p_zero - expected_zero) <= 1e-12 &&
                  std::abs(exact.probabilities.p_one - (1.0 - expected_zero)) <= 1e-12 &&
                  (!identical || sampled.zero_count == 0);

  std::ostringstream text;
  if (cfg.common.format == "csv") {
    text << "schema_version,n,subset_size,case,K,seed,p_zero,p_one,zero_count,verdict,"
            "error_bound,queries_alpha,queries_beta,naive_standard_overlap\n";
    text << kSchemaVersion << ',' << cfg.n << ',' << cfg.subset_size << ',' << cfg.case_name
         << ',' << cfg.trials << ',' << seed << ',' << number(probability(exact.probabilities.p_zero))
         << ',' << number(probability(exact.probabilities.p_one)) << ',' << sampled.zero_count << ','
         << to_string(sampled.verdict) << ',' << number(sampled.error_probability_bound)
         << ',' << sampled.queries_alpha << ',' << sampled.queries_beta << ','
         << number(probability(overlap)) << '\n';
  } else {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = cfg.n;
    j["subset_size"] = cfg.subset_size;
    j["case"] = cfg.case_name;
    j["K"] = cfg.trials;
    j["seed"] = seed;
    j["p_zero"] = probability(exact.probabilities.p_zero);
    j["p_one"] = probability(exact.probabilities.p_one);
    j["zero_count"] = sampled.zero_count;
    j["verdict"] = to_string(sampled.verdict);
    j["error_bound"] = sampled.error_probability_bound;
    j["queries_alpha"] = sampled.queries_alpha;
    j["queries_beta"] = sampled.queries_beta;
    j["naive_standard_overlap"] = probability(overlap);
    text << j.dump(2) << '\n';
  }
  emit(cfg.common, text.str(), out);
  return ok ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------

struct ScalingConfig {
  CommonOptions common;
  unsigned n_min = 2;
  unsigned n_max = 6;
  unsigned permutations = 3;
};

int cmd_grover_scaling(const ScalingConfig& cfg, std::ostream& out) {
  if (cfg.n_min < kScalingMinN || cfg.n_max > kScalingMaxN || cfg.n_min > cfg.n_max)
    throw UsageError("--n-min/--n-max must satisfy " + std::to_string(kScalingMinN) +
                     " <= n-min <= n-max <= " + std::to_string(kScalingMaxN));
  if (cfg.permutations < 1) throw UsageError("--trials must be at least 1");
  const std::uint64_t seed = resolve_seed(cfg.common);
  const auto rows = query_scaling_table(cfg.n_min, cfg.n_max, cfg.permutations, seed);

  bool ok = true;
  std::ostringstream text;
  if (cfg.common.format == "csv") {
    text << "n,N,iterations,sf_queries,mean_success_probability\n";
    for (const auto& r : rows)
      text << r.n << ',' << r.N << ',' << r.iterations << ',' << r.sf_queries << ','
           << number(probability(r.mean_success_probability)) << '\n';
  } else {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["seed"] = seed;
    j["permutations_per_n"] = cfg.permutations;
    j["rows"] = Json::array();
    for (const auto& r : rows)
      j["rows"].push_back(Json{{"n", r.n},
                               {"N", r.N},
                               {"iterations", r.iterations},
                               {"sf_queries", r.sf_queries},
                               {"mean_success_probability", probability(r.mean_success_probability)}});
    text << j.dump(2) << '\n';
  }
  for (const auto& r : rows) ok = ok && r.sf_queries <= scaling_query_bound(r.n);
  emit(cfg.common, text.str(), out);
  return ok ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------

struct GraphConfig {
  CommonOptions common;
  std::string first;
  std::string second;
  std::uint64_t trials = 20;
};

Graph load_checked(const std::string& path, int which) {
  const std::string label = "graph " + std::to_string(which) + " (" + path + ")";
  Graph g = [&] {
    try {
      return load_graph(path);
    } catch (const ParseError& e) {
      throw UsageError(label + ": " + e.what());
    }
  }();
  if (g.vertex_count() > kSuperpositionCap)
    throw UsageError(label + ": more than " + std::to_string(kSuperpositionCap) +
                     " vertices");
  if (!check_non_automorphic(g))
    throw UsageError(label + " is automorphic: it has a non-trivial automorphism");
  return g;
}

int cmd_graph_iso(const GraphConfig& cfg, std::ostream& out) {
  if (cfg.trials < 1) throw UsageError("--trials must be at least 1");
  const Graph g1 = load_checked(cfg.first, 1);
  const Graph g2 = load_checked(cfg.second, 2);
  if (g1.vertex_count() != g2.vertex_count())
    throw UsageError("graphs have different vertex counts (" +
                     std::to_string(g1.vertex_count()) + " vs " +
                     std::to_string(g2.vertex_count()) + ")");
  const std::uint64_t seed = resolve_seed(cfg.common);
  const GraphComparison cmp = compare_graphs(g1, g2, cfg.trials, seed);
  const bool isomorphic = cmp.summary.verdict == Verdict::IdenticalWithConfidence;

  std::ostringstream text;
  if (cfg.common.format == "csv") {
    text << "schema_version,vertices,K,seed,overlap,p_zero,p_one,zero_count,verdict,"
            "certain,error_bound\n";
    text << kSchemaVersion << ',' << g1.vertex_count() << ',' << cfg.trials << ',' << seed
         << ',' << number(probability(cmp.overlap)) << ',' << number(probability(cmp.probabilities.p_zero)) << ','
         << number(probability(cmp.probabilities.p_one)) << ',' << cmp.summary.zero_count << ','
         << (isomorphic ? "isomorphic" : "non-isomorphic") << ','
         << (isomorphic ? "false" : "true") << ','
         << number(cmp.summary.error_probability_bound) << '\n';
  } else {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["vertices"] = g1.vertex_count();
    j["K"] = cfg.trials;
    j["seed"] = seed;
    j["overlap"] = probability(cmp.overlap);
    j["p_zero"] = probability(cmp.probabilities.p_zero);
    j["p_one"] = probability(cmp.probabilities.p_one);
    j["zero_count"] = cmp.summary.zero_count;
    j["verdict"] = isomorphic ? "isomorphic" : "non-isomorphic";
    j["certain"] = !isomorphic;
    j["error_bound"] = cmp.summary.error_probability_bound;
    text << j.dump(2) << '\n';
  }
  emit(cfg.common, text.str(), out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Query-counting simulator for standard, phase and minimal oracles",
               "oraclebench"};
  app.require_subcommand(1);

  VerifyConfig verify;
  auto* verify_cmd =
      app.add_subcommand("verify-identities", "Check every oracle conversion identity");
  add_common(*verify_cmd, verify.common, "json");
  verify_cmd->add_option("--n", verify.n, "Qubits per register")->capture_default_str();
  verify_cmd->add_option("--mode", verify.mode, "exhaustive (n <= 3) or random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  verify_cmd->add_option("--perm", verify.perm_path, "Permutation file instead of a seeded one");
  verify_cmd->add_flag("--inject-fault", verify.inject_fault,
                       "Compare against a wrong permutation (exercises the failure path)");

  PromiseConfig promise;
  auto* promise_cmd =
      app.add_subcommand("promise", "Identical-or-disjoint images with minimal oracles");
  add_common(*promise_cmd, promise.common, "json");
  promise_cmd->add_option("--n", promise.n, "Qubits per register")->capture_default_str();
  promise_cmd->add_option("--subset-size", promise.subset_size, "|S|")->capture_default_str();
  promise_cmd->add_option("--case", promise.case_name, "Instance family")
      ->check(CLI::IsMember({"identical", "disjoint"}))
      ->capture_default_str();
  promise_cmd->add_option("--trials", promise.trials, "Repetitions K")->capture_default_str();

  ScalingConfig scaling;
  auto* scaling_cmd =
      app.add_subcommand("grover-scaling", "Query counts of Grover permutation inversion");
  add_common(*scaling_cmd, scaling.common, "csv");
  scaling_cmd->add_option("--n-min", scaling.n_min)->capture_default_str();
  scaling_cmd->add_option("--n-max", scaling.n_max)->capture_default_str();
  scaling_cmd->add_option("--trials", scaling.permutations, "Random permutations per n")
      ->capture_default_str();

  GraphConfig graph;
  auto* graph_cmd =
      app.add_subcommand("graph-iso", "Compare two asymmetric graphs via swap test");
  add_common(*graph_cmd, graph.common, "json");
  graph_cmd->add_option("first", graph.first, "First graph file")->required();
  graph_cmd->add_option("second", graph.second, "Second graph file")->required();
  graph_cmd->add_option("--trials", graph.trials, "Repetitions K")->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("oraclebench");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify_identities(verify, out);
    if (promise_cmd->parsed()) return cmd_promise(promise, out);
    if (scaling_cmd->parsed()) return cmd_grover_scaling(scaling, out);
    if (graph_cmd->parsed()) return cmd_graph_iso(graph, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace oraclebench::cli
