#include "eulext/exact_oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "eulext/errors.hpp"

namespace eulext {

namespace {

// Bitmask of odd-degree vertices after toggling the chosen edges.
std::uint32_t parity_mask(const Graph& g) {
  std::uint32_t mask = 0;
  for (Vertex v : g.odd_vertices()) mask |= 1u << v;
  return mask;
}

bool connected_with(const Graph& g, const std::vector<Edge>& complement,
                    const std::vector<std::size_t>& chosen) {
  Graph h = g;
  for (std::size_t idx : chosen) h.add_edge(complement[idx].u, complement[idx].v);
  return h.is_connected();
}

}  // namespace

OracleAnswer min_extension_exact(const Graph& g, std::optional<std::size_t> cap) {
  const std::size_t n = g.vertex_count();
  if (n > kOracleMaxVertices) {
    throw ParameterError("exact oracle is limited to n <= " + std::to_string(kOracleMaxVertices) +
                         " (got n=" + std::to_string(n) + "); use the extension engine instead");
  }
  const std::size_t t = g.t_value();

  std::vector<Edge> complement;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) complement.push_back(Edge{u, v});
    }
  }
  std::vector<std::uint32_t> toggles;
  toggles.reserve(complement.size());
  for (const Edge& e : complement) toggles.push_back((1u << e.u) | (1u << e.v));

  OracleAnswer answer;
  answer.cap = std::min(cap.value_or(3 * t), complement.size());
  const std::uint32_t target = parity_mask(g);

  for (std::size_t k = t; k <= answer.cap; ++k) {
    // Lexicographic k-combinations of complement edge indices.
    std::vector<std::size_t> chosen(k);
    for (std::size_t i = 0; i < k; ++i) chosen[i] = i;
    while (true) {
      std::uint32_t parity = 0;
      for (std::size_t idx : chosen) parity ^= toggles[idx];
      if (parity == target && connected_with(g, complement, chosen)) {
        answer.extendable = true;
        answer.min_edges = k;
        std::vector<Edge> witness;
        for (std::size_t idx : chosen) witness.push_back(complement[idx]);
        answer.witness = std::move(witness);
        return answer;
      }
      // Advance to the next combination.
      std::size_t i = k;
      while (i > 0 && chosen[i - 1] == complement.size() - k + (i - 1)) --i;
      if (i == 0) break;
      ++chosen[i - 1];
      for (std::size_t j = i; j < k; ++j) chosen[j] = chosen[j - 1] + 1;
    }
  }
  return answer;
}

}  // namespace eulext
