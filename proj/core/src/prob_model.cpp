#include "eulext/prob_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eulext/errors.hpp"

namespace eulext {

namespace {

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

// Neumaier-compensated running sum; keeps sums of n identical terms exact
// enough that dividing back by n recovers the term.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

std::size_t packed_index(Vertex hi, Vertex lo) {
  return static_cast<std::size_t>(hi) * (hi - 1) / 2 + lo;
}

}  // namespace

EdgeProbabilityModel EdgeProbabilityModel::homogeneous(std::size_t n, double p) {
  if (!is_probability(p)) {
    throw ParameterError("homogeneous probability must lie in [0,1], got " + std::to_string(p));
  }
  EdgeProbabilityModel m;
  m.kind_ = Kind::homogeneous;
  m.n_ = n;
  m.p_ = p;
  return m;
}

EdgeProbabilityModel EdgeProbabilityModel::example_family(std::size_t n, double a, double b) {
  if (!(0.0 < b && b < a && a < 1.0)) {
    throw ParameterError("example family requires 0 < b < a < 1");
  }
  if (n < 16) throw ParameterError("example family requires n >= 16");
  EdgeProbabilityModel m;
  m.kind_ = Kind::example_family;
  m.n_ = n;
  m.a_ = a;
  m.b_ = b;
  const double ln_n = std::log(static_cast<double>(n));
  m.k1_ = static_cast<std::size_t>(std::floor(static_cast<double>(n) / ln_n));
  m.k2_ = static_cast<std::size_t>(std::floor(2.0 * static_cast<double>(n) / ln_n));
  return m;
}

EdgeProbabilityModel EdgeProbabilityModel::explicit_matrix(
    const std::vector<std::vector<double>>& matrix) {
  const std::size_t n = matrix.size();
  std::vector<double> lower;
  lower.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (std::size_t u = 0; u < n; ++u) {
    if (matrix[u].size() != n) throw InputError("probability matrix must be square");
  }
  for (std::size_t u = 1; u < n; ++u) {
    for (std::size_t v = 0; v < u; ++v) {
      if (matrix[u][v] != matrix[v][u]) {
        throw InputError("probability matrix is not symmetric at (" + std::to_string(u) + "," +
                         std::to_string(v) + ")");
      }
      lower.push_back(matrix[u][v]);
    }
  }
  return from_lower_triangle(n, std::move(lower));
}

EdgeProbabilityModel EdgeProbabilityModel::from_lower_triangle(std::size_t n,
                                                               std::vector<double> lower) {
  if (lower.size() != n * (n > 0 ? n - 1 : 0) / 2) {
    throw InputError("lower triangle for n=" + std::to_string(n) + " needs " +
                     std::to_string(n * (n > 0 ? n - 1 : 0) / 2) + " entries, got " +
                     std::to_string(lower.size()));
  }
  for (double p : lower) {
    if (!is_probability(p)) {
      throw InputError("edge probability out of [0,1]: " + std::to_string(p));
    }
  }
  EdgeProbabilityModel m;
  m.kind_ = Kind::explicit_matrix;
  m.n_ = n;
  m.lower_ = std::move(lower);
  return m;
}

double EdgeProbabilityModel::p(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) throw InputError("vertex out of range");
  if (u == v) throw InputError("p(u,u) is undefined");
  return unchecked(u, v);
}

double EdgeProbabilityModel::unchecked(Vertex u, Vertex v) const noexcept {
  switch (kind_) {
    case Kind::homogeneous:
      return p_;
    case Kind::explicit_matrix:
      return u > v ? lower_[packed_index(u, v)] : lower_[packed_index(v, u)];
    case Kind::example_family: {
      const Vertex lo = std::min(u, v);
      const Vertex hi = std::max(u, v);
      if (hi == n_ - 1) return a_;
      if (hi < k1_ || hi == lo + 1) return 1.0;
      if (lo >= k1_ && hi < k2_) return 0.0;
      return b_;
    }
  }
  return 0.0;
}

AlphaStats alpha_stats(const EdgeProbabilityModel& model) {
  const std::size_t n = model.vertex_count();
  if (n < 2) throw ParameterError("alpha statistics need n >= 2");

  AlphaStats stats;
  if (model.kind() == EdgeProbabilityModel::Kind::homogeneous) {
    const double p = model.homogeneous_p();
    stats.per_vertex_avg.assign(n, p);
    stats.alpha_low = stats.alpha_up = stats.alpha_e = p;
    return stats;
  }

  std::vector<CompensatedSum> row_sums(n);
  CompensatedSum total;
  for (Vertex u = 1; u < n; ++u) {
    for (Vertex v = 0; v < u; ++v) {
      const double p = model.p(u, v);
      row_sums[u].add(p);
      row_sums[v].add(p);
      total.add(p);
    }
  }
  const double denom = static_cast<double>(n - 1);
  stats.per_vertex_avg.reserve(n);
  for (const auto& s : row_sums) stats.per_vertex_avg.push_back(s.value() / denom);

  const auto [lo, hi] = std::minmax_element(stats.per_vertex_avg.begin(), stats.per_vertex_avg.end());
  stats.alpha_low = *lo;
  stats.alpha_up = *hi;
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  // Rounding can place the density an ulp outside [low, up]; the identity is exact.
  stats.alpha_e = std::clamp(total.value() / pairs, stats.alpha_low, stats.alpha_up);
  return stats;
}

Graph sample_graph(const EdgeProbabilityModel& model, Rng& rng) {
  const std::size_t n = model.vertex_count();
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (unit_uniform(rng) < model.p(u, v)) g.add_edge(u, v);
    }
  }
  return g;
}

ConditionVerdict check_condition(const AlphaStats& stats, std::size_t n, double beta, double gamma) {
  if (!(beta > 0.0 && beta < 0.5)) throw ParameterError("beta must lie in (0, 1/2)");
  if (!(gamma > 0.0 && gamma < 0.5 - beta)) {
    throw ParameterError("gamma must lie in (0, 1/2 - beta)");
  }
  const double nd = static_cast<double>(n);
  ConditionVerdict out;
  out.lower_slack = stats.alpha_low - std::pow(nd, -beta);
  const double ceiling = std::max(0.5, 1.0 - std::sqrt(stats.alpha_e / 2.0)) - std::pow(nd, -gamma);
  out.upper_slack = ceiling - stats.alpha_up;
  out.margin = std::min(out.lower_slack, out.upper_slack);
  out.holds = out.lower_slack >= 0.0 && out.upper_slack >= 0.0;
  return out;
}

}  // namespace eulext
