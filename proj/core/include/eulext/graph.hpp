#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace eulext {

// Vertices are 0-based: 0 .. n-1.
using Vertex = std::uint32_t;

// Undirected edge. Construct through Edge::canonical() to get u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static constexpr Edge canonical(Vertex a, Vertex b) noexcept {
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

using AdjacencyRow = boost::dynamic_bitset<std::uint64_t>;

// Simple undirected graph on a fixed vertex set. Adjacency is one bitset row
// per vertex so complement queries are word-parallel; the complement is never
// materialized.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  // Duplicates are collapsed. Throws InputError on out-of-range ids or loops.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

  // The complete graph K_n.
  static Graph complete(std::size_t n);

  std::size_t vertex_count() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  // Throws InputError when v is out of range.
  std::size_t degree(Vertex v) const;
  std::size_t max_degree() const noexcept;

  bool has_edge(Vertex u, Vertex v) const;

  // Throws PreconditionError for loops or an edge that already exists,
  // InputError for out-of-range ids.
  void add_edge(Vertex u, Vertex v);

  const AdjacencyRow& neighbors(Vertex v) const;

  // Sorted ascending. The size is always even.
  std::vector<Vertex> odd_vertices() const;
  std::size_t t_value() const { return odd_vertices().size() / 2; }

  // True iff a traversal from vertex 0 reaches every vertex (vacuous for n <= 1).
  bool is_connected() const;

  // Connectivity restricted to vertices of positive degree.
  bool is_connected_ignoring_isolated() const;

  // { z : z not in {u, v}, z adjacent to neither u nor v }, ascending.
  // Throws PreconditionError when u == v.
  std::vector<Vertex> common_non_neighbors(Vertex u, Vertex v) const;
  std::size_t common_non_neighbor_count(Vertex u, Vertex v) const;

  // Bitset of complement neighbours of v (excluding v itself).
  AdjacencyRow non_neighbors(Vertex v) const;

  // Canonical (u < v), lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  void check_vertex(Vertex v) const;

  std::vector<AdjacencyRow> rows_;
  std::vector<std::size_t> degrees_;
  std::size_t edge_count_ = 0;
};

// Closed walk, first vertex == last vertex. An edgeless graph yields {0}.
struct EulerCircuit {
  std::vector<Vertex> vertices;
};

enum class EulerFailure { odd_vertices, disconnected };

using EulerOutcome = std::variant<EulerCircuit, EulerFailure>;

// Hierholzer extraction, always following the lowest-numbered unused
// neighbour. Isolated vertices are ignored for connectivity.
EulerOutcome eulerian_circuit(const Graph& g);

// True iff `walk` is a closed walk using every edge of g exactly once.
bool is_euler_circuit_of(const Graph& g, std::span<const Vertex> walk);

}  // namespace eulext
