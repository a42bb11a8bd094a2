#include "eulext/extension.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <random>

#include "eulext/errors.hpp"

namespace eulext {

namespace {

constexpr std::size_t npos = AdjacencyRow::npos;

// u - y - z - v uses only complement edges and four distinct vertices.
bool is_complement_three_path(const Graph& h, Vertex u, Vertex y, Vertex z, Vertex v) {
  if (y == z || y == u || y == v || z == u || z == v) return false;
  return !h.has_edge(u, y) && !h.has_edge(y, z) && !h.has_edge(z, v);
}

void add_path(Graph& h, std::vector<Edge>& added, std::initializer_list<Vertex> path) {
  const Vertex* prev = nullptr;
  for (const Vertex& x : path) {
    if (prev != nullptr) {
      h.add_edge(*prev, x);
      added.push_back(Edge::canonical(*prev, x));
    }
    prev = &x;
  }
}

}  // namespace

std::string phase_name(Phase phase) {
  switch (phase) {
    case Phase::pairing:
      return "pairing";
    case Phase::two_path:
      return "two_path";
    case Phase::three_path:
      return "three_path";
  }
  return "unknown";
}

std::string failure_reason_name(FailureReason reason) {
  switch (reason) {
    case FailureReason::disconnected_input:
      return "disconnected_input";
    case FailureReason::no_three_path:
      return "no_three_path";
    case FailureReason::not_extendable:
      return "not_extendable";
  }
  return "unknown";
}

std::size_t default_random_attempts(std::size_t n) {
  if (n < 2) return 64;
  return 64 * static_cast<std::size_t>(std::ceil(std::log(static_cast<double>(n))));
}

std::size_t ExtensionResult::count(Phase phase) const {
  return static_cast<std::size_t>(std::count_if(added_edges.begin(), added_edges.end(),
                                                [phase](const TaggedEdge& e) { return e.phase == phase; }));
}

PairingOutcome phase_pairing(Graph& working, std::span<const Vertex> odd) {
  const std::size_t n = working.vertex_count();
  AdjacencyRow unmarked(n);
  for (Vertex x : odd) unmarked.set(x);

  PairingOutcome out;
  for (auto x = unmarked.find_first(); x != npos; x = unmarked.find_next(x)) {
    AdjacencyRow candidates = unmarked - working.neighbors(static_cast<Vertex>(x));
    const auto y = candidates.find_next(x);
    if (y == npos) continue;
    working.add_edge(static_cast<Vertex>(x), static_cast<Vertex>(y));
    out.added.push_back(Edge{static_cast<Vertex>(x), static_cast<Vertex>(y)});
    unmarked.reset(x);
    unmarked.reset(y);
  }
  for (auto x = unmarked.find_first(); x != npos; x = unmarked.find_next(x)) {
    out.residual.push_back(static_cast<Vertex>(x));
  }
  return out;
}

CliqueReductionOutcome phase_clique_reduction(Graph& working, std::span<const Vertex> residual) {
  const std::size_t n = working.vertex_count();
  AdjacencyRow members(n);
  for (Vertex a : residual) members.set(a);
  AdjacencyRow active = members;

  CliqueReductionOutcome out;
  for (auto i = active.find_first(); i != npos; i = active.find_next(i)) {
    const auto a = static_cast<Vertex>(i);
    const AdjacencyRow outside_a = working.non_neighbors(a) - members;
    if (outside_a.none()) continue;
    for (auto j = active.find_next(i); j != npos; j = active.find_next(j)) {
      const auto b = static_cast<Vertex>(j);
      const auto z = (outside_a & working.non_neighbors(b)).find_first();
      if (z == npos) continue;
      add_path(working, out.added, {a, static_cast<Vertex>(z), b});
      active.reset(i);
      active.reset(j);
      break;
    }
  }
  for (auto x = active.find_first(); x != npos; x = active.find_next(x)) {
    out.clique.push_back(static_cast<Vertex>(x));
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> pair_up(std::span<const Vertex> clique) {
  if (clique.size() % 2 != 0) throw PreconditionError("pair_up needs an even number of vertices");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(clique.size() / 2);
  for (std::size_t i = 0; i < clique.size(); i += 2) pairs.emplace_back(clique[i], clique[i + 1]);
  return pairs;
}

ThreePathOutcome phase_three_paths(Graph& working, std::span<const std::pair<Vertex, Vertex>> pairs,
                                   Rng& rng, const ExtensionPolicy& policy) {
  const std::size_t n = working.vertex_count();
  const std::size_t budget = policy.max_random_attempts.value_or(default_random_attempts(n));
  ThreePathOutcome out;
  if (pairs.empty()) return out;
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));

  for (const auto& [u, v] : pairs) {
    bool done = false;
    for (std::size_t k = 0; k < budget && !done; ++k) {
      const Vertex y = pick(rng);
      const Vertex z = pick(rng);
      ++out.random_attempts;
      if (is_complement_three_path(working, u, y, z, v)) {
        add_path(working, out.added, {u, y, z, v});
        done = true;
      } else if (is_complement_three_path(working, u, z, y, v)) {
        add_path(working, out.added, {u, z, y, v});
        done = true;
      }
    }
    if (done) continue;

    AdjacencyRow first_hops = working.non_neighbors(u);
    first_hops.reset(v);
    AdjacencyRow last_hops = working.non_neighbors(v);
    last_hops.reset(u);
    for (auto y = first_hops.find_first(); y != npos && !done; y = first_hops.find_next(y)) {
      const auto z = (working.non_neighbors(static_cast<Vertex>(y)) & last_hops).find_first();
      if (z == npos) continue;
      add_path(working, out.added, {u, static_cast<Vertex>(y), static_cast<Vertex>(z), v});
      done = true;
    }
    if (!done) {
      out.success = false;
      out.failing_pair = std::make_pair(u, v);
      return out;
    }
  }
  return out;
}

ExtensionResult extend(const Graph& g, Rng& rng, const ExtensionPolicy& policy) {
  ExtensionResult result;
  const std::vector<Vertex> odd = g.odd_vertices();
  result.t_input = odd.size() / 2;

  if (!g.is_connected()) {
    result.failure_reason = FailureReason::disconnected_input;
    return result;
  }
  if (odd.empty()) {
    result.success = true;
    return result;
  }
  const std::size_t n = g.vertex_count();
  if (g.edge_count() == n * (n - 1) / 2) {
    result.failure_reason = FailureReason::not_extendable;
    return result;
  }

  Graph working = g;
  const PairingOutcome pairing = phase_pairing(working, odd);
  const CliqueReductionOutcome reduction = phase_clique_reduction(working, pairing.residual);
  const auto pairs = pair_up(reduction.clique);
  const ThreePathOutcome paths = phase_three_paths(working, pairs, rng, policy);
  result.attempts_phase3 = paths.random_attempts;

  if (!paths.success) {
    result.failure_reason = FailureReason::no_three_path;
    result.failing_pair = paths.failing_pair;
    return result;
  }

  for (const Edge& e : pairing.added) result.added_edges.push_back({e, Phase::pairing});
  for (const Edge& e : reduction.added) result.added_edges.push_back({e, Phase::two_path});
  for (const Edge& e : paths.added) result.added_edges.push_back({e, Phase::three_path});
  result.success = true;
  assert(result.added_edges.size() <= 3 * result.t_input);
  return result;
}

Graph apply_extension(const Graph& g, const ExtensionResult& r) {
  Graph h = g;
  for (const TaggedEdge& e : r.added_edges) h.add_edge(e.edge.u, e.edge.v);
  return h;
}

VerificationReport verify_extension(const Graph& g, std::span<const Edge> added) {
  VerificationReport report;
  auto fail = [&report](std::string msg) { report.violations.push_back(std::move(msg)); };
  const std::size_t n = g.vertex_count();

  Graph h = g;
  bool edges_ok = true;
  for (const Edge& e : added) {
    const std::string tag = "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
    if (e.u >= n || e.v >= n || e.u == e.v) {
      fail("added edge " + tag + " is not a valid vertex pair");
      edges_ok = false;
    } else if (g.has_edge(e.u, e.v)) {
      fail("added edge " + tag + " already present in the input graph");
      edges_ok = false;
    } else if (h.has_edge(e.u, e.v)) {
      fail("added edge " + tag + " listed more than once");
      edges_ok = false;
    } else {
      h.add_edge(e.u, e.v);
    }
  }

  const std::size_t t = g.t_value();
  if (added.size() > 3 * t) {
    fail("added " + std::to_string(added.size()) + " edges, budget 3t = " + std::to_string(3 * t));
  }
  if (edges_ok) {
    if (!h.odd_vertices().empty()) fail("extended graph has odd-degree vertices");
    if (!h.is_connected()) fail("extended graph is disconnected");
    const EulerOutcome circuit = eulerian_circuit(h);
    const auto* walk = std::get_if<EulerCircuit>(&circuit);
    if (walk == nullptr || !is_euler_circuit_of(h, walk->vertices)) {
      fail("no Eulerian circuit could be extracted from the extended graph");
    }
  }
  report.ok = report.violations.empty();
  return report;
}

VerificationReport verify_extension(const Graph& g, const ExtensionResult& r) {
  std::vector<Edge> edges;
  edges.reserve(r.added_edges.size());
  for (const TaggedEdge& e : r.added_edges) edges.push_back(e.edge);
  VerificationReport report = verify_extension(g, edges);
  if (!r.success) {
    report.violations.insert(report.violations.begin(), "result is not marked successful");
    report.ok = false;
  }
  if (r.t_input != g.t_value()) {
    report.violations.push_back("result t does not match t(G)");
    report.ok = false;
  }
  return report;
}

}  // namespace eulext
