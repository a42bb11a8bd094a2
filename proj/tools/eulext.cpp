// eulext: sample inhomogeneous random graphs, build Eulerian extensions, run
// the exact oracle, evaluate the analytic bounds and drive Monte Carlo runs.
//
// Exit codes: 0 success (per-trial failures included), 2 bad configuration,
// 3 I/O error.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "eulext/bounds.hpp"
#include "eulext/edge_list.hpp"
#include "eulext/errors.hpp"
#include "eulext/exact_oracle.hpp"
#include "eulext/experiment.hpp"
#include "eulext/extension.hpp"
#include "eulext/model_spec.hpp"
#include "eulext/prob_model.hpp"

namespace {

using nlohmann::json;
using namespace eulext;

constexpr int kExitBadConfig = 2;
constexpr int kExitIo = 3;

// --model accepts a spec file path or an inline type name; the remaining
// fields come from flags and override the file.
struct ModelOptions {
  std::string model;
  std::optional<std::size_t> n;
  std::optional<double> p;
  std::optional<double> a;
  std::optional<double> b;
  std::optional<std::string> matrix_file;

  void attach(CLI::App& app) {
    app.add_option("--model", model, "Model spec file, or homogeneous|example_family|matrix")->required();
    app.add_option("--n", n, "Vertex count (overrides the spec)");
    app.add_option("--p", p, "Edge probability (homogeneous)");
    app.add_option("--a", a, "Constant a (example_family)");
    app.add_option("--b", b, "Constant b (example_family)");
    app.add_option("--matrix-file", matrix_file, "Lower-triangular matrix file (matrix)");
  }

  EdgeProbabilityModel build() const {
    ModelSpec spec;
    const bool is_type = model == "homogeneous" || model == "example_family" || model == "matrix";
    if (is_type && !std::filesystem::exists(model)) {
      spec.kind = parse_model_kind(model);
    } else {
      spec = load_model_spec(model);
    }
    if (p) spec.p = p;
    if (a) spec.a = a;
    if (b) spec.b = b;
    if (matrix_file) spec.matrix_file = *matrix_file;
    return build_model(spec, n);
  }
};

json model_json(const EdgeProbabilityModel& m) {
  json j{{"type", model_kind_name(m.kind())}, {"n", m.vertex_count()}};
  switch (m.kind()) {
    case EdgeProbabilityModel::Kind::homogeneous:
      j["p"] = m.homogeneous_p();
      break;
    case EdgeProbabilityModel::Kind::example_family:
      j["a"] = m.family_a();
      j["b"] = m.family_b();
      j["first_block_end"] = m.first_block_end();
      j["second_block_end"] = m.second_block_end();
      break;
    case EdgeProbabilityModel::Kind::explicit_matrix:
      break;
  }
  return j;
}

json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

json real_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

void write_json(const json& j, const std::optional<std::string>& path) {
  if (!path) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(*path);
  if (!out) throw IoError("cannot write " + *path);
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed for " + *path);
}

void write_graph(const Graph& g, const std::optional<std::string>& path) {
  if (path) {
    save_edge_list(*path, g);
  } else {
    write_edge_list(std::cout, g);
  }
}

int run_sample(const ModelOptions& opts, std::uint64_t seed, const std::optional<std::string>& out) {
  const EdgeProbabilityModel model = opts.build();
  Rng rng(seed);
  write_graph(sample_graph(model, rng), out);
  return 0;
}

int run_extend(const std::string& graph_path, std::uint64_t seed, std::optional<std::size_t> attempts,
               const std::optional<std::string>& out, const std::optional<std::string>& result_path) {
  const Graph g = load_edge_list(graph_path);
  Rng rng(seed);
  const ExtensionResult r = extend(g, rng, ExtensionPolicy{attempts});

  json added = json::array();
  for (const TaggedEdge& e : r.added_edges) {
    added.push_back({{"u", e.edge.u}, {"v", e.edge.v}, {"phase", phase_name(e.phase)}});
  }
  json record{{"n", g.vertex_count()},
              {"m", g.edge_count()},
              {"t", r.t_input},
              {"success", r.success},
              {"failure_reason", r.failure_reason ? json(failure_reason_name(*r.failure_reason)) : json(nullptr)},
              {"edges_added", r.added_edges.size()},
              {"budget_3t", 3 * r.t_input},
              {"phase_counts",
               {{"pairing", r.count(Phase::pairing)},
                {"two_path", r.count(Phase::two_path)},
                {"three_path", r.count(Phase::three_path)}}},
              {"attempts_phase3", r.attempts_phase3},
              {"added", added}};
  if (r.failing_pair) record["failing_pair"] = {r.failing_pair->first, r.failing_pair->second};
  if (r.success) {
    const VerificationReport report = verify_extension(g, r);
    record["verified"] = report.ok;
    if (!report.ok) record["violations"] = report.violations;
    if (out) save_edge_list(*out, apply_extension(g, r));
  } else if (out) {
    save_edge_list(*out, g);
  }
  write_json(record, result_path);
  return 0;
}

int run_oracle(const std::string& graph_path, std::optional<std::size_t> cap) {
  const Graph g = load_edge_list(graph_path);
  const OracleAnswer answer = min_extension_exact(g, cap);
  json witness = nullptr;
  if (answer.witness) {
    witness = json::array();
    for (const Edge& e : *answer.witness) witness.push_back(edge_json(e));
  }
  const json record{{"n", g.vertex_count()},
                    {"t", g.t_value()},
                    {"cap", answer.cap},
                    {"extendable", answer.extendable},
                    {"min_edges", answer.min_edges ? json(*answer.min_edges) : json(nullptr)},
                    {"witness", witness}};
  std::cout << record.dump(2) << '\n';
  return 0;
}

int run_bounds(const ModelOptions& opts, double beta, double gamma, std::optional<std::size_t> t) {
  const EdgeProbabilityModel model = opts.build();
  const std::size_t n = model.vertex_count();
  const AlphaStats stats = alpha_stats(model);
  const ConditionVerdict verdict = check_condition(stats, n, beta, gamma);
  const BoundParams params = default_params(n, beta, gamma);
  const std::size_t steps = t.value_or(n / 4);
  const StepBound step = step_success_bound(stats, n, params, steps);

  const json record{
      {"model", model_json(model)},
      {"alpha", {{"alpha_low", stats.alpha_low}, {"alpha_up", stats.alpha_up}, {"alpha_e", stats.alpha_e}}},
      {"condition",
       {{"beta", beta},
        {"gamma", gamma},
        {"holds", verdict.holds},
        {"lower_slack", verdict.lower_slack},
        {"upper_slack", verdict.upper_slack},
        {"margin", verdict.margin}}},
      {"params",
       {{"beta", params.beta},
        {"gamma", params.gamma},
        {"zeta", params.zeta},
        {"epsilon", params.epsilon},
        {"epsilon_in_tail_range", params.epsilon_in_tail_range()}}},
      {"step_bound",
       {{"t", steps},
        {"p_i", step.p_i},
        {"q_i", step.q_i},
        {"diff", step.diff},
        {"product_log", real_or_null(step.product_log)},
        {"analytic_floor", step.analytic_floor}}}};
  std::cout << record.dump(2) << '\n';
  return 0;
}

json summary_json(const Summary& s) {
  auto ms = [](const MeanSd& x) { return json{{"mean", x.mean}, {"sd", x.sd}}; };
  return json{{"trials", s.trials},
              {"success_fraction", s.success_fraction},
              {"within_3t_fraction", s.within_3t_fraction},
              {"verified_fraction", s.verified_fraction},
              {"connected_fraction", s.connected_fraction},
              {"e_good_deg_fraction", s.e_good_deg_fraction},
              {"e_good_edge_fraction", s.e_good_edge_fraction},
              {"e_good_fraction", s.e_good_fraction},
              {"e_all_fraction", s.e_all_fraction},
              {"t_value", ms(s.t_value)},
              {"edges_added", ms(s.edges_added)},
              {"delta", ms(s.delta)},
              {"m", ms(s.m)},
              {"failure_reasons", s.failure_reasons}};
}

int run_experiment(const ModelOptions& opts, ExperimentConfig config, const std::string& out_path,
                   const std::string& format_name, const std::optional<std::string>& summary_path) {
  config.model = opts.build();
  const OutputFormat format = parse_output_format(format_name);
  validate(config);
  const ExperimentResult result = run_trials(config);

  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot write " + out_path);
  write_records(out, result.records, format);
  out.close();
  if (!out) throw IoError("write failed for " + out_path);

  json summary = summary_json(result.summary);
  summary["model"] = model_json(config.model);
  summary["base_seed"] = config.base_seed;
  write_json(summary, summary_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eulerian extensions of inhomogeneous random graphs"};
  app.require_subcommand(1);

  ModelOptions sample_model;
  std::uint64_t sample_seed = 0;
  std::optional<std::string> sample_out;
  auto* sample = app.add_subcommand("sample", "Draw one graph from a model, emit an edge list");
  sample_model.attach(*sample);
  sample->add_option("--seed", sample_seed, "Random seed");
  sample->add_option("--out", sample_out, "Output edge-list file (default stdout)");

  std::string extend_graph;
  std::uint64_t extend_seed = 0;
  std::optional<std::size_t> extend_attempts;
  std::optional<std::string> extend_out;
  std::optional<std::string> extend_result;
  auto* ext = app.add_subcommand("extend", "Build an Eulerian extension of a graph");
  ext->add_option("--graph", extend_graph, "Input edge-list file")->required();
  ext->add_option("--seed", extend_seed, "Random seed for the three-path phase");
  ext->add_option("--max-attempts", extend_attempts, "Random draws per residual pair (default 64*ceil(ln n))");
  ext->add_option("--out", extend_out, "Write the extended graph here");
  ext->add_option("--result", extend_result, "Write the result record here (default stdout)");

  std::string oracle_graph;
  std::optional<std::size_t> oracle_cap;
  auto* orc = app.add_subcommand("oracle", "Exact minimum extension by exhaustive search (n <= 12)");
  orc->add_option("--graph", oracle_graph, "Input edge-list file")->required();
  orc->add_option("--cap", oracle_cap, "Largest subset size to try (default 3t)");

  ModelOptions bounds_model;
  double bounds_beta = 0.2;
  double bounds_gamma = 0.1;
  std::optional<std::size_t> bounds_t;
  auto* bnd = app.add_subcommand("bounds", "Evaluate alpha statistics, the sufficient condition and step bounds");
  bounds_model.attach(*bnd);
  bnd->add_option("--beta", bounds_beta, "Exponent beta in (0, 1/2)")->capture_default_str();
  bnd->add_option("--gamma", bounds_gamma, "Exponent gamma in (0, 1/2 - beta)")->capture_default_str();
  bnd->add_option("--t", bounds_t, "Number of steps for the product bound (default n/4)");

  ModelOptions exp_model;
  ExperimentConfig exp_config;
  std::string exp_out;
  std::string exp_format = "csv";
  std::optional<std::string> exp_summary;
  bool exp_no_oracle = false;
  auto* exp = app.add_subcommand("experiment", "Run seeded Monte Carlo trials");
  exp_model.attach(*exp);
  exp->add_option("--trials", exp_config.trials, "Number of trials")->required();
  exp->add_option("--seed", exp_config.base_seed, "Base seed");
  exp->add_option("--beta", exp_config.beta, "Exponent beta")->capture_default_str();
  exp->add_option("--gamma", exp_config.gamma, "Exponent gamma")->capture_default_str();
  exp->add_option("--max-attempts", exp_config.max_random_attempts, "Random draws per residual pair");
  exp->add_option("--threads", exp_config.threads, "Worker threads (0 = hardware)")->capture_default_str();
  exp->add_flag("--timing", exp_config.record_timing, "Record per-trial wall time (output no longer reproducible)");
  exp->add_flag("--no-oracle", exp_no_oracle, "Skip the exact-oracle cross-check for n <= 12");
  exp->add_option("--out", exp_out, "Trial records file")->required();
  exp->add_option("--format", exp_format, "csv or jsonl")->capture_default_str()->check(CLI::IsMember({"csv", "jsonl"}));
  exp->add_option("--summary", exp_summary, "Write the summary here (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadConfig;
  }

  try {
    if (*sample) return run_sample(sample_model, sample_seed, sample_out);
    if (*ext) return run_extend(extend_graph, extend_seed, extend_attempts, extend_out, extend_result);
    if (*orc) return run_oracle(oracle_graph, oracle_cap);
    if (*bnd) return run_bounds(bounds_model, bounds_beta, bounds_gamma, bounds_t);
    if (*exp) {
      if (exp_no_oracle) exp_config.run_oracle = false;
      return run_experiment(exp_model, exp_config, exp_out, exp_format, exp_summary);
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadConfig;
  }
  return 0;
}
