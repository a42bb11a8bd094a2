#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eulext/prob_model.hpp"

namespace eulext {

// splitmix64 finalizer over base + golden_gamma * (index + 1). Trial i of a
// run seeds its mt19937_64 with derive_seed(base_seed, i).
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index);

enum class OutputFormat { csv, jsonl };
OutputFormat parse_output_format(const std::string& name);

struct ExperimentConfig {
  EdgeProbabilityModel model = EdgeProbabilityModel::homogeneous(2, 0.0);
  std::size_t trials = 1;
  std::uint64_t base_seed = 0;
  double beta = 0.2;
  double gamma = 0.1;
  std::optional<std::size_t> max_random_attempts;
  // Cross-check against the exact oracle; unset means "when n <= 12".
  std::optional<bool> run_oracle;
  // Worker threads; 0 means hardware concurrency. Output does not depend on it.
  std::size_t threads = 1;
  // Measure per-trial wall time. Off by default so output files are
  // byte-identical across runs; wall_time is then written as 0.
  bool record_timing = false;
};

// Throws ParameterError when the config violates a module constraint.
void validate(const ExperimentConfig& config);

struct TrialRecord {
  std::size_t trial_index = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t m_sampled = 0;
  std::size_t delta_sampled = 0;
  std::size_t t_value = 0;
  bool connected = false;
  bool e_good_deg = false;
  bool e_good_edge = false;
  bool e_all = false;
  bool engine_success = false;
  std::string failure_reason;  // empty on success
  std::size_t edges_added = 0;
  std::size_t pairing_edges = 0;
  std::size_t two_path_edges = 0;
  std::size_t three_path_edges = 0;
  std::size_t phase3_attempts = 0;
  bool within_3t = false;  // engine_success and edges_added <= 3 t
  bool verified = false;   // verify_extension passed
  // Unset: oracle not run. -1: no extension within the oracle's cap.
  std::optional<long long> oracle_min;
  double wall_time = 0.0;  // seconds

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

// Column / key order of the output formats.
const std::vector<std::string>& record_fields();

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation; 0 for a single record
};

struct Summary {
  std::size_t trials = 0;
  double success_fraction = 0.0;
  double within_3t_fraction = 0.0;
  double verified_fraction = 0.0;
  double connected_fraction = 0.0;
  double e_good_deg_fraction = 0.0;
  double e_good_edge_fraction = 0.0;
  double e_good_fraction = 0.0;
  double e_all_fraction = 0.0;
  MeanSd t_value;
  MeanSd edges_added;
  MeanSd delta;
  MeanSd m;
  std::map<std::string, std::size_t> failure_reasons;
};

// Samples one graph, evaluates the proof events, extends and audits it.
TrialRecord run_trial(const ExperimentConfig& config, std::size_t trial_index);

struct ExperimentResult {
  std::vector<TrialRecord> records;  // ordered by trial_index
  Summary summary;
};

ExperimentResult run_trials(const ExperimentConfig& config);

// Throws ParameterError on an empty list.
Summary summarize(const std::vector<TrialRecord>& records);

// CSV: header then one row per record, booleans 0/1, reals with 9
// significant digits, missing oracle_min as an empty cell. JSONL: one object
// per line with the same keys, missing oracle_min as null.
void write_records(std::ostream& out, const std::vector<TrialRecord>& records, OutputFormat format);

// Mean fraction of odd-degree vertices over `trials` homogeneous samples,
// sample i drawn with derive_seed(seed, i). p must lie in [0, 1].
double odd_fraction_probe(std::size_t n, double p, std::size_t trials, std::uint64_t seed);

}  // namespace eulext
