#pragma once

#include <filesystem>
#include <iosfwd>

#include "eulext/graph.hpp"

namespace eulext {

// Edge-list text format:
//
//   n
//   u v
//   u v
//   ...
//
// Vertices are 0-based. On input, blank lines and anything after '#' are
// ignored and each pair may be given in either order. On output, pairs are
// written canonically (u < v) in lexicographic order.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// File wrappers; throw IoError when the file cannot be opened or written.
Graph load_edge_list(const std::filesystem::path& path);
void save_edge_list(const std::filesystem::path& path, const Graph& g);

}  // namespace eulext
