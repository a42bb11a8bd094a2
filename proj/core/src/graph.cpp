#include "eulext/graph.hpp"

#include <algorithm>
#include <string>

#include "eulext/errors.hpp"

namespace eulext {

namespace {

constexpr std::size_t npos = AdjacencyRow::npos;

std::string vertex_message(Vertex v, std::size_t n) {
  return "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n);
}

}  // namespace

Graph::Graph(std::size_t n) : rows_(n, AdjacencyRow(n)), degrees_(n, 0) {}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InputError(vertex_message(std::max(e.u, e.v), n));
    }
    if (e.u == e.v) {
      throw InputError("self-loop at vertex " + std::to_string(e.u));
    }
    if (!g.has_edge(e.u, e.v)) g.add_edge(e.u, e.v);
  }
  return g;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    g.rows_[u].set();
    g.rows_[u].reset(u);
    g.degrees_[u] = n - 1;
  }
  g.edge_count_ = n * (n > 0 ? n - 1 : 0) / 2;
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= vertex_count()) throw InputError(vertex_message(v, vertex_count()));
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  return degrees_[v];
}

std::size_t Graph::max_degree() const noexcept {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return rows_[u].test(v);
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  if (rows_[u].test(v)) {
    throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") already present");
  }
  rows_[u].set(v);
  rows_[v].set(u);
  ++degrees_[u];
  ++degrees_[v];
  ++edge_count_;
}

const AdjacencyRow& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return rows_[v];
}

std::vector<Vertex> Graph::odd_vertices() const {
  std::vector<Vertex> odd;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (degrees_[v] % 2 == 1) odd.push_back(v);
  }
  return odd;
}

namespace {

// Vertices reachable from `start` by BFS over bitset rows.
AdjacencyRow reachable_from(const std::vector<AdjacencyRow>& rows, Vertex start) {
  const std::size_t n = rows.size();
  AdjacencyRow seen(n);
  std::vector<Vertex> frontier{start};
  seen.set(start);
  while (!frontier.empty()) {
    const Vertex x = frontier.back();
    frontier.pop_back();
    AdjacencyRow fresh = rows[x] - seen;
    for (auto y = fresh.find_first(); y != npos; y = fresh.find_next(y)) {
      seen.set(y);
      frontier.push_back(static_cast<Vertex>(y));
    }
  }
  return seen;
}

}  // namespace

bool Graph::is_connected() const {
  if (vertex_count() <= 1) return true;
  return reachable_from(rows_, 0).all();
}

bool Graph::is_connected_ignoring_isolated() const {
  const auto first = std::find_if(degrees_.begin(), degrees_.end(),
                                  [](std::size_t d) { return d > 0; });
  if (first == degrees_.end()) return true;
  const auto start = static_cast<Vertex>(first - degrees_.begin());
  const AdjacencyRow seen = reachable_from(rows_, start);
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (degrees_[v] > 0 && !seen.test(v)) return false;
  }
  return true;
}

AdjacencyRow Graph::non_neighbors(Vertex v) const {
  check_vertex(v);
  AdjacencyRow out = ~rows_[v];
  out.reset(v);
  return out;
}

std::vector<Vertex> Graph::common_non_neighbors(Vertex u, Vertex v) const {
  if (u == v) throw PreconditionError("common_non_neighbors requires u != v");
  AdjacencyRow both = non_neighbors(u) & non_neighbors(v);
  std::vector<Vertex> out;
  out.reserve(both.count());
  for (auto z = both.find_first(); z != npos; z = both.find_next(z)) {
    out.push_back(static_cast<Vertex>(z));
  }
  return out;
}

std::size_t Graph::common_non_neighbor_count(Vertex u, Vertex v) const {
  if (u == v) throw PreconditionError("common_non_neighbors requires u != v");
  check_vertex(u);
  check_vertex(v);
  // |complement of (N(u) | N(v) | {u, v})|; u and v are not in their own rows.
  AdjacencyRow covered = rows_[u] | rows_[v];
  covered.set(u);
  covered.set(v);
  return vertex_count() - covered.count();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (auto v = rows_[u].find_next(u); v != npos; v = rows_[u].find_next(v)) {
      out.push_back(Edge{u, static_cast<Vertex>(v)});
    }
  }
  return out;
}

EulerOutcome eulerian_circuit(const Graph& g) {
  if (!g.odd_vertices().empty()) return EulerFailure::odd_vertices;
  if (!g.is_connected_ignoring_isolated()) return EulerFailure::disconnected;

  const std::size_t n = g.vertex_count();
  if (g.edge_count() == 0) {
    return EulerCircuit{n == 0 ? std::vector<Vertex>{} : std::vector<Vertex>{0}};
  }

  std::vector<AdjacencyRow> unused(n);
  Vertex start = 0;
  bool have_start = false;
  for (Vertex v = 0; v < n; ++v) {
    unused[v] = g.neighbors(v);
    if (!have_start && unused[v].any()) {
      start = v;
      have_start = true;
    }
  }

  std::vector<Vertex> stack{start};
  std::vector<Vertex> circuit;
  circuit.reserve(g.edge_count() + 1);
  while (!stack.empty()) {
    const Vertex x = stack.back();
    const auto y = unused[x].find_first();
    if (y == npos) {
      circuit.push_back(x);
      stack.pop_back();
      continue;
    }
    unused[x].reset(y);
    unused[y].reset(x);
    stack.push_back(static_cast<Vertex>(y));
  }
  std::reverse(circuit.begin(), circuit.end());
  return EulerCircuit{std::move(circuit)};
}

bool is_euler_circuit_of(const Graph& g, std::span<const Vertex> walk) {
  if (g.edge_count() == 0) return walk.size() <= 1;
  if (walk.size() != g.edge_count() + 1 || walk.front() != walk.back()) return false;
  std::vector<Edge> used;
  used.reserve(g.edge_count());
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    if (walk[i] >= g.vertex_count() || walk[i + 1] >= g.vertex_count()) return false;
    if (walk[i] == walk[i + 1] || !g.has_edge(walk[i], walk[i + 1])) return false;
    used.push_back(Edge::canonical(walk[i], walk[i + 1]));
  }
  std::sort(used.begin(), used.end());
  return std::adjacent_find(used.begin(), used.end()) == used.end();
}

}  // namespace eulext
