#pragma once

#include <cstddef>

#include "eulext/graph.hpp"
#include "eulext/prob_model.hpp"

namespace eulext {

// Exponents of the sufficient condition plus the derived deviation fraction.
// Valid when 0 < beta < 1/2, 0 < gamma < 1/2 - beta and
// gamma + beta/2 < zeta < (1 - beta)/2.
struct BoundParams {
  double beta = 0.0;
  double gamma = 0.0;
  double zeta = 0.0;
  double epsilon = 0.0;  // n^-zeta

  // Whether epsilon lies in (0, 1/2], where the Bernoulli tail bound is stated.
  bool epsilon_in_tail_range() const noexcept { return epsilon > 0.0 && epsilon <= 0.5; }
};

// Bernoulli-sum tail bound P(|T - mu| >= eps mu) <= exp(-eps^2 mu / 4).
// Requires mu > 0 and 0 < eps <= 1/2 (ParameterError).
double chernoff_tail(double mu, double eps);

// zeta = midpoint of (gamma + beta/2, (1 - beta)/2), epsilon = n^-zeta.
// Throws ParameterError when beta or gamma is out of range.
BoundParams default_params(std::size_t n, double beta, double gamma);

struct GoodEvent {
  bool deg_ok = false;   // max degree <= alpha_up (1 + eps) (n - 1)
  bool edge_ok = false;  // m <= alpha_e (1 + eps) C(n, 2)
};

GoodEvent e_good_check(const Graph& g, const AlphaStats& stats, const BoundParams& params);

// Threshold (ln n)^3 / 2 on the number of common non-neighbours.
double e_all_threshold(std::size_t n);

// Every pair u != v has at least (ln n)^3 / 2 common non-neighbours.
bool e_all_check(const Graph& g, std::size_t n);

// Union bound on P(max degree exceeds alpha_up (1 + eps)(n - 1)) obtained from
// the per-vertex tail exp(-eps^2 (n - 1) alpha_low / 4), capped at 1.
double degree_violation_bound(const AlphaStats& stats, std::size_t n, const BoundParams& params);

struct StepBound {
  double p_i = 0.0;          // 2 (1 - alpha_up (1 + eps))^2
  double q_i = 0.0;          // 9/n + alpha_e (1 + eps)
  double diff = 0.0;         // p_i - q_i
  double product_log = 0.0;  // t log(diff); -inf when diff <= 0 and t > 0
  double analytic_floor = 0.0;  // sqrt(2) n^-(gamma + beta/2) - 1/n - 2 n^-zeta
};

// Per-step success bounds of the random three-path phase and their product
// over t steps. diff <= 0 is reported, not thrown.
StepBound step_success_bound(const AlphaStats& stats, std::size_t n, const BoundParams& params,
                             std::size_t t);

}  // namespace eulext
