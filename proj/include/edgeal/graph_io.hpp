#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "edgeal/graph.hpp"

namespace edgeal {

/// Malformed textual graph input. offset is the 0-based byte position of the
/// first offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// graph6: a size byte n+63 followed by the upper triangle of the adjacency
// matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six
// bits per byte, most significant bit first, each byte offset by 63.
std::string encode_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" header and trailing "\r\n". Rejects
/// nonzero padding bits so that encode(decode(s)) == s.
Graph decode_graph6(std::string_view line);

/// "n\nu v\nu v\n..." with 1-based vertices; '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

/// Inline edge list "1 2, 2 3; 3 4" with 1-based vertices. The order is the
/// largest label unless min_order is larger. An empty string is the edgeless
/// graph on max(min_order, 1) vertices.
Graph parse_inline_edges(std::string_view text, int min_order = 0);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
/// Triangle x1x2x3 joined through x3x4, x4x5 to the triangle x5x6x7.
Graph example42_graph();

/// Named families: cycle, path, complete, complete_bipartite, example42.
/// params are the family's integer parameters, e.g. {5} for cycle(5) or
/// {2, 3} for complete_bipartite(2, 3). Throws std::invalid_argument for an
/// unknown name or bad parameters.
std::vector<Graph> builtin_family(const std::string& name, const std::vector<int>& params);

/// Parses "cycle:5", "cycle:3..6", "complete_bipartite:2,3", "example42",
/// and the short aliases C5, P4, K4, K2,3.
std::vector<Graph> builtin_from_spec(const std::string& spec);

}  // namespace edgeal
