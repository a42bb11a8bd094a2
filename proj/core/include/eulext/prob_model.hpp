#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "eulext/graph.hpp"

namespace eulext {

// Random source used by every sampling routine.
using Rng = std::mt19937_64;

// Uniform double in [0, 1) built from the top 53 bits of one draw.
inline double unit_uniform(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Symmetric matrix p(u, v) of independent edge-inclusion probabilities.
// Immutable after construction.
class EdgeProbabilityModel {
 public:
  enum class Kind { homogeneous, example_family, explicit_matrix };

  // p(u, v) = p for every pair.
  static EdgeProbabilityModel homogeneous(std::size_t n, double p);

  // Two-block family with constants 0 < b < a < 1, n >= 16. With 1-based
  // labels and k1 = floor(n / ln n), k2 = floor(2n / ln n), rules in priority
  // order:
  //   any edge at vertex n                         -> a
  //   both ends in 1..k1, or a path edge (i, i+1)  -> 1
  //   both ends in k1+1..k2                        -> 0
  //   otherwise                                    -> b
  // The closing cycle edges (n-1, n) and (n, 1) therefore carry a, which keeps
  // the row average of vertex n at exactly a.
  static EdgeProbabilityModel example_family(std::size_t n, double a, double b);

  // Full symmetric matrix; the diagonal is ignored.
  static EdgeProbabilityModel explicit_matrix(const std::vector<std::vector<double>>& matrix);

  // Strict lower triangle packed row by row: p(1,0), p(2,0), p(2,1), ...
  static EdgeProbabilityModel from_lower_triangle(std::size_t n, std::vector<double> lower);

  Kind kind() const noexcept { return kind_; }
  std::size_t vertex_count() const noexcept { return n_; }

  // Throws InputError for u == v or out-of-range ids.
  double p(Vertex u, Vertex v) const;

  // Kind-specific constants (meaningful only for the matching kind).
  double homogeneous_p() const noexcept { return p_; }
  double family_a() const noexcept { return a_; }
  double family_b() const noexcept { return b_; }
  std::size_t first_block_end() const noexcept { return k1_; }
  std::size_t second_block_end() const noexcept { return k2_; }

 private:
  EdgeProbabilityModel() = default;
  double unchecked(Vertex u, Vertex v) const noexcept;

  Kind kind_ = Kind::homogeneous;
  std::size_t n_ = 0;
  double p_ = 0.0;
  double a_ = 0.0;
  double b_ = 0.0;
  std::size_t k1_ = 0;
  std::size_t k2_ = 0;
  std::vector<double> lower_;
};

// Per-vertex average incident probability and the overall edge density.
struct AlphaStats {
  double alpha_low = 0.0;
  double alpha_up = 0.0;
  double alpha_e = 0.0;
  std::vector<double> per_vertex_avg;
};

// Requires n >= 2 (throws ParameterError otherwise).
AlphaStats alpha_stats(const EdgeProbabilityModel& model);

// Draws one graph. Pairs are visited in lexicographic (u < v) order and each
// consumes exactly one uniform draw, so a fixed seed fixes the graph.
Graph sample_graph(const EdgeProbabilityModel& model, Rng& rng);

struct ConditionVerdict {
  bool holds = false;
  double lower_slack = 0.0;  // alpha_low - n^-beta
  double upper_slack = 0.0;  // max(1/2, 1 - sqrt(alpha_e / 2)) - n^-gamma - alpha_up
  double margin = 0.0;       // min of the two slacks
};

// Sufficient condition for linear extendability:
//   n^-beta <= alpha_low <= alpha_up <= max(1/2, 1 - sqrt(alpha_e/2)) - n^-gamma
// Requires 0 < beta < 1/2 and 0 < gamma < 1/2 - beta (ParameterError).
ConditionVerdict check_condition(const AlphaStats& stats, std::size_t n, double beta, double gamma);

}  // namespace eulext
