#include "eulext/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eulext/errors.hpp"

namespace eulext {

double chernoff_tail(double mu, double eps) {
  if (!(eps > 0.0 && eps <= 0.5)) throw ParameterError("chernoff_tail: eps must lie in (0, 1/2]");
  if (!(mu > 0.0)) throw ParameterError("chernoff_tail: mu must be positive");
  return std::exp(-eps * eps * mu / 4.0);
}

BoundParams default_params(std::size_t n, double beta, double gamma) {
  if (!(beta > 0.0 && beta < 0.5)) throw ParameterError("beta must lie in (0, 1/2)");
  if (!(gamma > 0.0 && gamma < 0.5 - beta)) {
    throw ParameterError("gamma must lie in (0, 1/2 - beta)");
  }
  const double lo = gamma + beta / 2.0;
  const double hi = (1.0 - beta) / 2.0;
  if (!(lo < hi)) throw ParameterError("empty interval for zeta");
  if (n < 2) throw ParameterError("bound parameters need n >= 2");
  BoundParams params;
  params.beta = beta;
  params.gamma = gamma;
  params.zeta = (lo + hi) / 2.0;
  params.epsilon = std::pow(static_cast<double>(n), -params.zeta);
  return params;
}

GoodEvent e_good_check(const Graph& g, const AlphaStats& stats, const BoundParams& params) {
  const double n = static_cast<double>(g.vertex_count());
  const double pairs = n * (n - 1.0) / 2.0;
  GoodEvent out;
  out.deg_ok = static_cast<double>(g.max_degree()) <= stats.alpha_up * (1.0 + params.epsilon) * (n - 1.0);
  out.edge_ok = static_cast<double>(g.edge_count()) <= stats.alpha_e * (1.0 + params.epsilon) * pairs;
  return out;
}

double e_all_threshold(std::size_t n) {
  const double ln_n = std::log(static_cast<double>(n));
  return ln_n * ln_n * ln_n / 2.0;
}

bool e_all_check(const Graph& g, std::size_t n) {
  const double threshold = e_all_threshold(n);
  const std::size_t vertices = g.vertex_count();
  for (Vertex u = 0; u < vertices; ++u) {
    for (Vertex v = u + 1; v < vertices; ++v) {
      if (static_cast<double>(g.common_non_neighbor_count(u, v)) < threshold) return false;
    }
  }
  return true;
}

double degree_violation_bound(const AlphaStats& stats, std::size_t n, const BoundParams& params) {
  const double nd = static_cast<double>(n);
  const double eps = params.epsilon;
  const double per_vertex = std::exp(-eps * eps / 4.0 * (nd - 1.0) * stats.alpha_low);
  return std::min(1.0, nd * per_vertex);
}

StepBound step_success_bound(const AlphaStats& stats, std::size_t n, const BoundParams& params,
                             std::size_t t) {
  const double nd = static_cast<double>(n);
  const double eps = params.epsilon;
  StepBound out;
  const double room = 1.0 - stats.alpha_up * (1.0 + eps);
  out.p_i = 2.0 * room * room;
  out.q_i = 9.0 / nd + stats.alpha_e * (1.0 + eps);
  out.diff = out.p_i - out.q_i;
  if (t == 0) {
    out.product_log = 0.0;
  } else if (out.diff > 0.0) {
    out.product_log = static_cast<double>(t) * std::log(out.diff);
  } else {
    out.product_log = -std::numeric_limits<double>::infinity();
  }
  out.analytic_floor = std::sqrt(2.0) * std::pow(nd, -(params.gamma + params.beta / 2.0)) - 1.0 / nd -
                       2.0 * std::pow(nd, -params.zeta);
  return out;
}

}  // namespace eulext
