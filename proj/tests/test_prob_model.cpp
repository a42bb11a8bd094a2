#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <sstream>

#include "eulext/errors.hpp"
#include "eulext/model_spec.hpp"
#include "eulext/prob_model.hpp"

using namespace eulext;

namespace {

// Example-family rule written directly over 1-based labels.
double family_rule(std::size_t n, double a, double b, std::size_t i, std::size_t j) {
  const double ln_n = std::log(static_cast<double>(n));
  const auto k1 = static_cast<std::size_t>(std::floor(n / ln_n));
  const auto k2 = static_cast<std::size_t>(std::floor(2 * n / ln_n));
  const std::size_t x = std::min(i, j);
  const std::size_t y = std::max(i, j);
  if (y == n) return a;
  if (y <= k1 || y == x + 1) return 1.0;
  if (x >= k1 + 1 && y <= k2) return 0.0;
  return b;
}

EdgeProbabilityModel three_vertex_model() {
  return EdgeProbabilityModel::explicit_matrix({{0.0, 0.2, 0.4}, {0.2, 0.0, 0.6}, {0.4, 0.6, 0.0}});
}

}  // namespace

TEST_CASE("homogeneous and explicit constructors") {
  const auto hom = EdgeProbabilityModel::homogeneous(5, 0.3);
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = 0; v < 5; ++v)
      if (u != v) CHECK(hom.p(u, v) == 0.3);

  const auto m = three_vertex_model();
  CHECK(m.p(0, 1) == 0.2);
  CHECK(m.p(1, 0) == 0.2);
  CHECK(m.p(0, 2) == 0.4);
  CHECK(m.p(2, 1) == 0.6);
  CHECK_THROWS_AS(m.p(1, 1), InputError);

  CHECK_THROWS_AS(EdgeProbabilityModel::explicit_matrix({{0, 1.2}, {1.2, 0}}), InputError);
  CHECK_THROWS_AS(EdgeProbabilityModel::explicit_matrix({{0, 0.1}, {0.2, 0}}), InputError);
  CHECK_THROWS_AS(EdgeProbabilityModel::homogeneous(4, -0.1), ParameterError);
}

TEST_CASE("example family constraints and rules") {
  CHECK_THROWS_AS(EdgeProbabilityModel::example_family(100, 0.2, 0.4), ParameterError);
  CHECK_THROWS_AS(EdgeProbabilityModel::example_family(100, 1.0, 0.4), ParameterError);
  CHECK_THROWS_AS(EdgeProbabilityModel::example_family(100, 0.4, 0.0), ParameterError);
  CHECK_THROWS_AS(EdgeProbabilityModel::example_family(15, 0.4, 0.2), ParameterError);

  for (std::size_t n : {16u, 64u, 300u}) {
    const auto m = EdgeProbabilityModel::example_family(n, 0.4, 0.2);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) CHECK(m.p(u, v) == family_rule(n, 0.4, 0.2, u + 1, v + 1));
  }
}

TEST_CASE("alpha statistics") {
  SUBCASE("homogeneous is exact") {
    for (double p : {0.0, 0.1, 0.3, 1.0 / 3.0, 0.7, 1.0}) {
      const AlphaStats s = alpha_stats(EdgeProbabilityModel::homogeneous(37, p));
      CHECK(s.alpha_low == p);
      CHECK(s.alpha_up == p);
      CHECK(s.alpha_e == p);
    }
  }
  SUBCASE("explicit three-vertex matrix") {
    const AlphaStats s = alpha_stats(three_vertex_model());
    CHECK(s.per_vertex_avg[0] == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(s.per_vertex_avg[1] == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(s.per_vertex_avg[2] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(s.alpha_low == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(s.alpha_up == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(s.alpha_e == doctest::Approx(0.4).epsilon(1e-12));
  }
  SUBCASE("example family against exact rational evaluation") {
    // Reference values from exact rational arithmetic over family_rule.
    const AlphaStats s64 = alpha_stats(EdgeProbabilityModel::example_family(64, 0.4, 0.2));
    CHECK(s64.alpha_up == 0.4);
    CHECK(s64.alpha_low == doctest::Approx(0.1873015873015873).epsilon(1e-12));
    CHECK(s64.alpha_e == doctest::Approx(0.25793650793650796).epsilon(1e-12));

    const AlphaStats s300 = alpha_stats(EdgeProbabilityModel::example_family(300, 0.4, 0.2));
    CHECK(s300.alpha_up == 0.4);
    CHECK(s300.alpha_low == doctest::Approx(0.17190635451505018).epsilon(1e-12));
    CHECK(s300.alpha_e == doctest::Approx(0.22347826086956524).epsilon(1e-12));
  }
  SUBCASE("example family at n = 4096") {
    const AlphaStats s = alpha_stats(EdgeProbabilityModel::example_family(4096, 0.4, 0.2));
    CHECK(s.alpha_up == 0.4);
    CHECK(std::abs(s.alpha_low / 0.2 - 1.0) <= 2.0 / std::log(4096.0));
  }
  SUBCASE("ordering holds on random explicit matrices") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t n = 2 + rng() % 12;
      std::vector<std::vector<double>> mat(n, std::vector<double>(n, 0.0));
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) mat[u][v] = mat[v][u] = unit(rng);
      const AlphaStats s = alpha_stats(EdgeProbabilityModel::explicit_matrix(mat));
      CHECK(s.alpha_low <= s.alpha_e);
      CHECK(s.alpha_e <= s.alpha_up);
      CHECK(s.alpha_low == *std::min_element(s.per_vertex_avg.begin(), s.per_vertex_avg.end()));
      CHECK(s.alpha_up == *std::max_element(s.per_vertex_avg.begin(), s.per_vertex_avg.end()));
      // Handshake: the mean of the per-vertex averages is the density.
      double mean = 0.0;
      for (double x : s.per_vertex_avg) mean += x;
      CHECK(mean / static_cast<double>(n) == doctest::Approx(s.alpha_e).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(alpha_stats(EdgeProbabilityModel::homogeneous(1, 0.5)), ParameterError);
}

TEST_CASE("sampling") {
  Rng rng(1);
  for (int i = 0; i < 5; ++i) {
    CHECK(sample_graph(EdgeProbabilityModel::homogeneous(20, 0.0), rng).edge_count() == 0);
    CHECK(sample_graph(EdgeProbabilityModel::homogeneous(20, 1.0), rng).edge_count() == 190);
  }

  SUBCASE("same seed, same graph") {
    const auto model = EdgeProbabilityModel::homogeneous(60, 0.37);
    Rng a(99), b(99);
    CHECK(sample_graph(model, a) == sample_graph(model, b));
  }

  SUBCASE("inclusion frequency and independence") {
    // Binomial 3-sigma bands: sd of the frequency is sqrt(0.21 / 1e4) ~ 0.0046,
    // sd of the covariance estimate is ~ 0.21 / sqrt(1e4) = 0.0021.
    const auto model = EdgeProbabilityModel::homogeneous(100, 0.3);
    Rng rng2(2024);
    const int samples = 10000;
    double hits01 = 0, hits23 = 0, both = 0;
    for (int s = 0; s < samples; ++s) {
      const Graph g = sample_graph(model, rng2);
      const bool x = g.has_edge(0, 1);
      const bool y = g.has_edge(2, 3);
      hits01 += x;
      hits23 += y;
      both += x && y;
    }
    const double f01 = hits01 / samples;
    const double f23 = hits23 / samples;
    CHECK(std::abs(f01 - 0.3) <= 0.015);
    CHECK(std::abs(both / samples - f01 * f23) <= 3 * 0.0021);
  }

  SUBCASE("example family samples are connected") {
    const auto model = EdgeProbabilityModel::example_family(50, 0.4, 0.2);
    Rng rng3(5);
    for (int s = 0; s < 100; ++s) {
      const Graph g = sample_graph(model, rng3);
      CHECK(g.is_connected());
      for (Vertex v = 0; v + 2 < 50; ++v) CHECK(g.has_edge(v, v + 1));
    }
  }
}

TEST_CASE("sufficient condition") {
  SUBCASE("limit statistics of the (0.4, 0.2) family") {
    AlphaStats s;
    s.alpha_low = 0.2;
    s.alpha_up = 0.4;
    s.alpha_e = 0.2;
    const ConditionVerdict v = check_condition(s, 1000000, 0.2, 0.1);
    CHECK(v.holds);
    CHECK(v.margin > 0.0);
  }
  SUBCASE("a above 1 - sqrt(b/2) fails the upper inequality") {
    AlphaStats s;
    s.alpha_low = 0.2;
    s.alpha_up = 0.9;
    s.alpha_e = 0.2;
    const ConditionVerdict v = check_condition(s, 1000000, 0.2, 0.1);
    CHECK_FALSE(v.holds);
    CHECK(v.upper_slack < 0.0);
    CHECK(v.lower_slack > 0.0);
    CHECK(v.margin == v.upper_slack);
  }
  SUBCASE("homogeneous p = 1/2 sits on the boundary and fails") {
    const std::size_t n = 1000;
    const ConditionVerdict v = check_condition(alpha_stats(EdgeProbabilityModel::homogeneous(n, 0.5)), n, 0.2, 0.1);
    CHECK_FALSE(v.holds);
    CHECK(v.upper_slack == doctest::Approx(-std::pow(1000.0, -0.1)).epsilon(1e-12));
  }
  SUBCASE("desk-scale family at n = 300 does not meet the asymptotic condition") {
    const ConditionVerdict v =
        check_condition(alpha_stats(EdgeProbabilityModel::example_family(300, 0.4, 0.2)), 300, 0.2, 0.1);
    CHECK_FALSE(v.holds);
    CHECK(v.lower_slack == doctest::Approx(0.17190635451505018 - std::pow(300.0, -0.2)).epsilon(1e-10));
  }
  AlphaStats s;
  CHECK_THROWS_AS(check_condition(s, 100, 0.0, 0.1), ParameterError);
  CHECK_THROWS_AS(check_condition(s, 100, 0.4, 0.2), ParameterError);
}

TEST_CASE("model spec files") {
  std::istringstream hom("# comment\ntype: homogeneous\nn: 12\np: 0.25\n");
  const ModelSpec spec = parse_model_spec(hom);
  const auto m = build_model(spec);
  CHECK(m.kind() == EdgeProbabilityModel::Kind::homogeneous);
  CHECK(m.vertex_count() == 12);
  CHECK(m.p(3, 4) == 0.25);
  CHECK(build_model(spec, 40).vertex_count() == 40);

  std::istringstream fam("type: example_family\nn: 64\na: 0.4\nb: 0.2\n");
  CHECK(build_model(parse_model_spec(fam)).kind() == EdgeProbabilityModel::Kind::example_family);

  std::istringstream missing("type: homogeneous\nn: 10\n");
  CHECK_THROWS_AS(build_model(parse_model_spec(missing)), ParameterError);
  std::istringstream unknown("type: homogeneous\nq: 1\n");
  CHECK_THROWS_AS(parse_model_spec(unknown), InputError);
  std::istringstream badtype("type: graphon\n");
  CHECK_THROWS_AS(parse_model_spec(badtype), InputError);

  std::istringstream tri("0.2\n0.4 0.6\n");
  const LowerTriangle lt = read_lower_triangle(tri);
  CHECK(lt.n == 3);
  const auto explicit_model = EdgeProbabilityModel::from_lower_triangle(lt.n, lt.values);
  CHECK(explicit_model.p(0, 1) == 0.2);
  CHECK(explicit_model.p(2, 0) == 0.4);
  CHECK(explicit_model.p(1, 2) == 0.6);
  std::istringstream ragged("0.2\n0.4\n");
  CHECK_THROWS_AS(read_lower_triangle(ragged), InputError);
}
