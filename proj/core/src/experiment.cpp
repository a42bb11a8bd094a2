#include "eulext/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "eulext/bounds.hpp"
#include "eulext/errors.hpp"
#include "eulext/exact_oracle.hpp"
#include "eulext/extension.hpp"

namespace eulext {

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index) {
  std::uint64_t z = base_seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

OutputFormat parse_output_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "jsonl") return OutputFormat::jsonl;
  throw ParameterError("unknown output format '" + name + "' (csv|jsonl)");
}

void validate(const ExperimentConfig& config) {
  if (config.trials < 1) throw ParameterError("trials must be >= 1");
  if (config.model.vertex_count() < 2) throw ParameterError("experiments need n >= 2");
  // Range checks for beta and gamma.
  (void)default_params(config.model.vertex_count(), config.beta, config.gamma);
}

namespace {

struct Context {
  AlphaStats stats;
  BoundParams params;
  bool oracle = false;
};

Context make_context(const ExperimentConfig& config) {
  validate(config);
  const std::size_t n = config.model.vertex_count();
  Context ctx{alpha_stats(config.model), default_params(n, config.beta, config.gamma), false};
  ctx.oracle = config.run_oracle.value_or(n <= kOracleMaxVertices) && n <= kOracleMaxVertices;
  return ctx;
}

TrialRecord run_one(const ExperimentConfig& config, const Context& ctx, std::size_t trial_index) {
  const auto start = std::chrono::steady_clock::now();
  TrialRecord rec;
  rec.trial_index = trial_index;
  rec.seed = derive_seed(config.base_seed, trial_index);
  rec.n = config.model.vertex_count();

  Rng rng(rec.seed);
  const Graph g = sample_graph(config.model, rng);
  rec.m_sampled = g.edge_count();
  rec.delta_sampled = g.max_degree();
  rec.t_value = g.t_value();
  rec.connected = g.is_connected();
  const GoodEvent good = e_good_check(g, ctx.stats, ctx.params);
  rec.e_good_deg = good.deg_ok;
  rec.e_good_edge = good.edge_ok;
  rec.e_all = e_all_check(g, rec.n);

  ExtensionPolicy policy{config.max_random_attempts};
  const ExtensionResult result = extend(g, rng, policy);
  rec.engine_success = result.success;
  if (result.failure_reason) rec.failure_reason = failure_reason_name(*result.failure_reason);
  rec.edges_added = result.added_edges.size();
  rec.pairing_edges = result.count(Phase::pairing);
  rec.two_path_edges = result.count(Phase::two_path);
  rec.three_path_edges = result.count(Phase::three_path);
  rec.phase3_attempts = result.attempts_phase3;
  rec.within_3t = result.success && rec.edges_added <= 3 * rec.t_value;
  rec.verified = result.success && verify_extension(g, result).ok;

  if (ctx.oracle) {
    const OracleAnswer answer = min_extension_exact(g);
    rec.oracle_min = answer.min_edges ? static_cast<long long>(*answer.min_edges) : -1LL;
  }
  if (config.record_timing) {
    rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return rec;
}

MeanSd mean_sd(const std::vector<TrialRecord>& records, std::size_t TrialRecord::*field) {
  double sum = 0.0;
  for (const auto& r : records) sum += static_cast<double>(r.*field);
  const double count = static_cast<double>(records.size());
  MeanSd out{sum / count, 0.0};
  if (records.size() > 1) {
    double sq = 0.0;
    for (const auto& r : records) {
      const double d = static_cast<double>(r.*field) - out.mean;
      sq += d * d;
    }
    out.sd = std::sqrt(sq / (count - 1.0));
  }
  return out;
}

double fraction(const std::vector<TrialRecord>& records, bool TrialRecord::*flag) {
  const auto hits = std::count_if(records.begin(), records.end(),
                                  [flag](const TrialRecord& r) { return r.*flag; });
  return static_cast<double>(hits) / static_cast<double>(records.size());
}

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

}  // namespace

TrialRecord run_trial(const ExperimentConfig& config, std::size_t trial_index) {
  return run_one(config, make_context(config), trial_index);
}

ExperimentResult run_trials(const ExperimentConfig& config) {
  const Context ctx = make_context(config);
  ExperimentResult result;
  result.records.resize(config.trials);

  std::size_t workers = config.threads == 0 ? std::thread::hardware_concurrency() : config.threads;
  workers = std::clamp<std::size_t>(workers, 1, config.trials);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < config.trials; i = next++) {
      result.records[i] = run_one(config, ctx, i);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  result.summary = summarize(result.records);
  return result;
}

Summary summarize(const std::vector<TrialRecord>& records) {
  if (records.empty()) throw ParameterError("cannot summarize an empty record list");
  Summary s;
  s.trials = records.size();
  s.success_fraction = fraction(records, &TrialRecord::engine_success);
  s.within_3t_fraction = fraction(records, &TrialRecord::within_3t);
  s.verified_fraction = fraction(records, &TrialRecord::verified);
  s.connected_fraction = fraction(records, &TrialRecord::connected);
  s.e_good_deg_fraction = fraction(records, &TrialRecord::e_good_deg);
  s.e_good_edge_fraction = fraction(records, &TrialRecord::e_good_edge);
  s.e_all_fraction = fraction(records, &TrialRecord::e_all);
  const auto both = std::count_if(records.begin(), records.end(),
                                  [](const TrialRecord& r) { return r.e_good_deg && r.e_good_edge; });
  s.e_good_fraction = static_cast<double>(both) / static_cast<double>(records.size());
  s.t_value = mean_sd(records, &TrialRecord::t_value);
  s.edges_added = mean_sd(records, &TrialRecord::edges_added);
  s.delta = mean_sd(records, &TrialRecord::delta_sampled);
  s.m = mean_sd(records, &TrialRecord::m_sampled);
  for (const auto& r : records) {
    if (!r.failure_reason.empty()) ++s.failure_reasons[r.failure_reason];
  }
  return s;
}

const std::vector<std::string>& record_fields() {
  static const std::vector<std::string> fields{
      "trial_index",    "seed",           "n",
      "m_sampled",      "delta_sampled",  "t_value",
      "connected",      "e_good_deg",     "e_good_edge",
      "e_all",          "engine_success", "failure_reason",
      "edges_added",    "pairing_edges",  "two_path_edges",
      "three_path_edges", "phase3_attempts", "within_3t",
      "verified",       "oracle_min",     "wall_time"};
  return fields;
}

void write_records(std::ostream& out, const std::vector<TrialRecord>& records, OutputFormat format) {
  const auto& keys = record_fields();
  if (format == OutputFormat::csv) {
    for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
    out << '\n';
  }
  for (const TrialRecord& r : records) {
    const bool csv = format == OutputFormat::csv;
    auto flag = [csv](bool b) -> std::string { return csv ? (b ? "1" : "0") : (b ? "true" : "false"); };
    auto text = [csv](const std::string& s) -> std::string {
      if (csv) return s;
      return s.empty() ? "null" : "\"" + s + "\"";
    };
    const std::string oracle =
        r.oracle_min ? std::to_string(*r.oracle_min) : (csv ? std::string() : std::string("null"));
    const std::vector<std::string> values{
        std::to_string(r.trial_index),      std::to_string(r.seed),
        std::to_string(r.n),                std::to_string(r.m_sampled),
        std::to_string(r.delta_sampled),    std::to_string(r.t_value),
        flag(r.connected),                  flag(r.e_good_deg),
        flag(r.e_good_edge),                flag(r.e_all),
        flag(r.engine_success),             text(r.failure_reason),
        std::to_string(r.edges_added),      std::to_string(r.pairing_edges),
        std::to_string(r.two_path_edges),   std::to_string(r.three_path_edges),
        std::to_string(r.phase3_attempts),  flag(r.within_3t),
        flag(r.verified),                   oracle,
        format_real(r.wall_time)};
    if (csv) {
      for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
    } else {
      out << '{';
      for (std::size_t i = 0; i < values.size(); ++i) {
        out << (i ? "," : "") << '"' << keys[i] << "\":" << values[i];
      }
      out << '}';
    }
    out << '\n';
  }
}

double odd_fraction_probe(std::size_t n, double p, std::size_t trials, std::uint64_t seed) {
  if (n == 0 || trials == 0) throw ParameterError("odd_fraction_probe needs n >= 1 and trials >= 1");
  const EdgeProbabilityModel model = EdgeProbabilityModel::homogeneous(n, p);
  double total = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng(derive_seed(seed, i));
    const Graph g = sample_graph(model, rng);
    total += static_cast<double>(g.odd_vertices().size()) / static_cast<double>(n);
  }
  return total / static_cast<double>(trials);
}

}  // namespace eulext
