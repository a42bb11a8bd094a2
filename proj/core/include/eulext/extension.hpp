#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eulext/graph.hpp"
#include "eulext/prob_model.hpp"

namespace eulext {

// Which construction step contributed an edge.
enum class Phase { pairing, two_path, three_path };

enum class FailureReason {
  disconnected_input,  // input graph not connected
  no_three_path,       // some residual pair admits no complement 3-path
  not_extendable,      // odd vertices exist but the complement has no edges
};

std::string phase_name(Phase phase);
std::string failure_reason_name(FailureReason reason);

struct TaggedEdge {
  Edge edge;
  Phase phase = Phase::pairing;

  friend bool operator==(const TaggedEdge&, const TaggedEdge&) = default;
};

struct ExtensionPolicy {
  // Uniform (Y, Z) draws per residual pair before the exhaustive scan.
  // Unset means 64 * ceil(ln n).
  std::optional<std::size_t> max_random_attempts;
};

std::size_t default_random_attempts(std::size_t n);

struct ExtensionResult {
  std::vector<TaggedEdge> added_edges;  // empty unless success
  std::size_t t_input = 0;
  bool success = false;
  std::optional<FailureReason> failure_reason;
  std::optional<std::pair<Vertex, Vertex>> failing_pair;  // set for no_three_path
  std::size_t attempts_phase3 = 0;  // random draws consumed in the three-path phase

  std::size_t count(Phase phase) const;

  friend bool operator==(const ExtensionResult&, const ExtensionResult&) = default;
};

// Phase 1. Scanning odd vertices in ascending order, joins each unmarked x to
// the smallest unmarked odd y > x with (x, y) not an edge. The edges are added
// to `working`. The unmatched odd vertices that remain are pairwise adjacent.
struct PairingOutcome {
  std::vector<Edge> added;
  std::vector<Vertex> residual;  // ascending
};
PairingOutcome phase_pairing(Graph& working, std::span<const Vertex> odd);

// Phase 2. For residual vertices a < a' (lexicographic scan) sharing a
// complement neighbour z outside the residual set, adds the path a - z - a'
// with the smallest such z. What remains is the clique U whose members have
// pairwise disjoint external complement neighbourhoods.
struct CliqueReductionOutcome {
  std::vector<Edge> added;
  std::vector<Vertex> clique;  // ascending, even size
};
CliqueReductionOutcome phase_clique_reduction(Graph& working, std::span<const Vertex> residual);

// Phase 3. For each pair (u, v) in order, finds distinct Y, Z outside {u, v}
// such that u - Y - Z - v is a path in the complement of the current graph and
// adds its three edges. Tries uniform random (Y, Z) draws first, then scans
// exhaustively; fails only when the exhaustive scan finds nothing.
struct ThreePathOutcome {
  std::vector<Edge> added;
  bool success = true;
  std::optional<std::pair<Vertex, Vertex>> failing_pair;
  std::size_t random_attempts = 0;
};
ThreePathOutcome phase_three_paths(Graph& working, std::span<const std::pair<Vertex, Vertex>> pairs,
                                   Rng& rng, const ExtensionPolicy& policy = {});

// Consecutive pairs (U[0], U[1]), (U[2], U[3]), ... of an even-sized set.
std::vector<std::pair<Vertex, Vertex>> pair_up(std::span<const Vertex> clique);

// Runs the three phases on a copy of g. On success |added| <= 3 t(g) and
// g + added is Eulerian. The input is never modified.
ExtensionResult extend(const Graph& g, Rng& rng, const ExtensionPolicy& policy = {});

// g plus the result's added edges. Throws PreconditionError if an added edge
// already exists in g.
Graph apply_extension(const Graph& g, const ExtensionResult& r);

struct VerificationReport {
  bool ok = false;
  std::vector<std::string> violations;
};

// Independent audit of a claimed extension: every added edge is new and
// distinct, the union is connected with all degrees even, an Euler circuit
// can be extracted, and |added| <= 3 t(g).
VerificationReport verify_extension(const Graph& g, std::span<const Edge> added);
VerificationReport verify_extension(const Graph& g, const ExtensionResult& r);

}  // namespace eulext
