#include "eulext/edge_list.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "eulext/errors.hpp"

namespace eulext {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool is_blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

// Parses exactly `count` non-negative integers from `text`.
std::vector<unsigned long long> parse_integers(const std::string& text, std::size_t count,
                                               std::size_t line_no) {
  std::istringstream ss(text);
  std::vector<unsigned long long> values;
  std::string token;
  while (ss >> token) {
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      if (token.front() == '-') throw std::invalid_argument(token);
      value = std::stoull(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw InputError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                       token + "'");
    }
    values.push_back(value);
  }
  if (values.size() != count) {
    throw InputError("line " + std::to_string(line_no) + ": expected " + std::to_string(count) +
                     " integer(s), got " + std::to_string(values.size()));
  }
  return values;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = strip_comment(line);
    if (is_blank(body)) continue;
    if (!n) {
      n = static_cast<std::size_t>(parse_integers(body, 1, line_no)[0]);
      continue;
    }
    const auto uv = parse_integers(body, 2, line_no);
    if (uv[0] >= *n || uv[1] >= *n) {
      throw InputError("line " + std::to_string(line_no) + ": vertex out of range for n=" +
                       std::to_string(*n));
    }
    edges.push_back(Edge{static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1])});
  }
  if (!n) throw InputError("edge list is empty: missing vertex count");
  return Graph::from_edge_list(*n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file " + path.string());
  return read_edge_list(in);
}

void save_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write graph file " + path.string());
  write_edge_list(out, g);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace eulext
