#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "eulext/errors.hpp"
#include "eulext/experiment.hpp"
#include "json.hpp"

using namespace eulext;

namespace {

std::string render(const std::vector<TrialRecord>& records, OutputFormat format) {
  std::ostringstream out;
  write_records(out, records, format);
  return out.str();
}

void check_record_invariants(const TrialRecord& r) {
  if (r.engine_success) CHECK(r.within_3t);
  if (!r.connected) {
    CHECK_FALSE(r.engine_success);
    CHECK(r.failure_reason == "disconnected_input");
  }
  CHECK(r.within_3t == (r.engine_success && r.edges_added <= 3 * r.t_value));
  CHECK(r.edges_added == r.pairing_edges + r.two_path_edges + r.three_path_edges);
  if (r.engine_success) CHECK(r.verified);
}

}  // namespace

TEST_CASE("seed derivation") {
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  CHECK(derive_seed(7, 3) == derive_seed(7, 3));
  // splitmix64 reference: first output for state 0 is 0xE220A8397B1DCDAF.
  CHECK(derive_seed(0, 0) == 0xE220A8397B1DCDAFULL);
}

TEST_CASE("trial examples") {
  SUBCASE("empty graphs are disconnected") {
    ExperimentConfig config;
    config.model = EdgeProbabilityModel::homogeneous(100, 0.0);
    config.trials = 10;
    const ExperimentResult res = run_trials(config);
    CHECK(res.summary.success_fraction == 0.0);
    CHECK(res.summary.failure_reasons.at("disconnected_input") == 10);
    for (const auto& r : res.records) check_record_invariants(r);
  }
  SUBCASE("triangles need nothing") {
    ExperimentConfig config;
    config.model = EdgeProbabilityModel::homogeneous(3, 1.0);
    config.trials = 5;
    const ExperimentResult res = run_trials(config);
    CHECK(res.summary.success_fraction == 1.0);
    for (const auto& r : res.records) {
      CHECK(r.t_value == 0);
      CHECK(r.edges_added == 0);
      CHECK(r.oracle_min == 0);
      check_record_invariants(r);
    }
  }
  SUBCASE("example family at n = 100") {
    ExperimentConfig config;
    config.model = EdgeProbabilityModel::example_family(100, 0.4, 0.2);
    config.trials = 40;
    config.base_seed = 17;
    const ExperimentResult res = run_trials(config);
    CHECK(res.summary.connected_fraction == 1.0);
    CHECK(res.summary.success_fraction >= 0.99);
    CHECK(res.summary.within_3t_fraction == res.summary.success_fraction);
    for (const auto& r : res.records) check_record_invariants(r);
  }
  SUBCASE("oracle cross-check on small graphs") {
    ExperimentConfig config;
    config.model = EdgeProbabilityModel::homogeneous(7, 0.5);
    config.trials = 30;
    const ExperimentResult res = run_trials(config);
    for (const auto& r : res.records) {
      REQUIRE(r.oracle_min.has_value());
      if (r.engine_success) {
        CHECK(*r.oracle_min >= static_cast<long long>(r.t_value));
        CHECK(*r.oracle_min <= static_cast<long long>(r.edges_added));
      }
    }
    config.run_oracle = false;
    CHECK_FALSE(run_trials(config).records.front().oracle_min.has_value());
  }
}

TEST_CASE("config validation") {
  ExperimentConfig config;
  config.model = EdgeProbabilityModel::homogeneous(10, 0.3);
  config.trials = 0;
  CHECK_THROWS_AS(run_trials(config), ParameterError);
  config.trials = 1;
  config.beta = 0.45;
  CHECK_THROWS_AS(run_trials(config), ParameterError);
  CHECK_THROWS_AS(parse_output_format("xml"), ParameterError);
}

TEST_CASE("summaries") {
  TrialRecord ok;
  ok.engine_success = true;
  ok.within_3t = true;
  ok.t_value = 3;
  ok.edges_added = 4;
  CHECK(summarize(std::vector<TrialRecord>(10, ok)).success_fraction == 1.0);

  TrialRecord bad;
  bad.failure_reason = "no_three_path";
  std::vector<TrialRecord> mixed(3, ok);
  mixed.insert(mixed.end(), 7, bad);
  const Summary s = summarize(mixed);
  CHECK(s.success_fraction == doctest::Approx(0.3));
  CHECK(s.failure_reasons.at("no_three_path") == 7);

  TrialRecord zero;
  zero.engine_success = true;
  const Summary z = summarize(std::vector<TrialRecord>(4, zero));
  CHECK(z.edges_added.mean == 0.0);
  CHECK(z.edges_added.sd == 0.0);

  CHECK_THROWS_AS(summarize({}), ParameterError);
}

TEST_CASE("odd fraction probe") {
  const double f = odd_fraction_probe(1000, 0.5, 50, 9);
  CHECK(f >= 0.45);
  CHECK(f <= 0.55);
  CHECK(odd_fraction_probe(7, 1.0, 3, 1) == 0.0);
  CHECK(odd_fraction_probe(4, 1.0, 3, 1) == 1.0);
}

TEST_CASE("output is deterministic and schema-stable") {
  ExperimentConfig config;
  config.model = EdgeProbabilityModel::homogeneous(40, 0.2);
  config.trials = 25;
  config.base_seed = 99;

  const ExperimentResult a = run_trials(config);
  config.threads = 4;
  const ExperimentResult b = run_trials(config);
  CHECK(render(a.records, OutputFormat::csv) == render(b.records, OutputFormat::csv));
  CHECK(render(a.records, OutputFormat::jsonl) == render(b.records, OutputFormat::jsonl));

  // Running trials individually in reverse order yields the same records.
  std::vector<TrialRecord> reversed;
  for (std::size_t i = config.trials; i-- > 0;) reversed.push_back(run_trial(config, i));
  std::sort(reversed.begin(), reversed.end(),
            [](const TrialRecord& x, const TrialRecord& y) { return x.trial_index < y.trial_index; });
  CHECK(reversed == a.records);

  const std::string csv = render(a.records, OutputFormat::csv);
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  std::string joined;
  for (const auto& k : record_fields()) joined += (joined.empty() ? "" : ",") + k;
  CHECK(header == joined);
  std::string row;
  std::size_t rows = 0;
  while (std::getline(lines, row)) {
    CHECK(std::count(row.begin(), row.end(), ',') + 1 == static_cast<long>(record_fields().size()));
    ++rows;
  }
  CHECK(rows == config.trials);

  std::istringstream jsonl(render(a.records, OutputFormat::jsonl));
  std::string line;
  std::size_t index = 0;
  while (std::getline(jsonl, line)) {
    const auto obj = nlohmann::json::parse(line);
    REQUIRE(obj.size() == record_fields().size());
    for (const auto& k : record_fields()) CHECK(obj.contains(k));
    const auto& r = a.records[index++];
    CHECK(obj["within_3t"].get<bool>() ==
          (obj["engine_success"].get<bool>() &&
           obj["edges_added"].get<std::size_t>() <= 3 * obj["t_value"].get<std::size_t>()));
    CHECK(obj["seed"].get<std::uint64_t>() == r.seed);
  }
  CHECK(index == config.trials);
}
