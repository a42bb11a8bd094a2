#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "eulext/graph.hpp"

namespace eulext {

inline constexpr std::size_t kOracleMaxVertices = 12;

struct OracleAnswer {
  bool extendable = false;
  std::optional<std::size_t> min_edges;
  std::optional<std::vector<Edge>> witness;
  std::size_t cap = 0;  // largest cardinality that was searched
};

// Smallest set of complement edges whose addition leaves g connected with all
// degrees even. Subsets are tried by increasing size from t(g) up to `cap`
// (default 3 t(g)), lexicographically within a size, so the witness is
// deterministic. Refuses graphs with more than kOracleMaxVertices vertices
// (ParameterError).
OracleAnswer min_extension_exact(const Graph& g, std::optional<std::size_t> cap = std::nullopt);

}  // namespace eulext
