#pragma once

// graph6 and DIMACS edge-format export, plus the vertex-label sidecar.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grasscode/code_graph.hpp"

namespace grasscode {

struct EdgeList {
  std::size_t vertex_count = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;  // u < v, sorted
};

/// graph6: N(n) header, then the upper triangle column by column
/// (x(0,1), x(0,2), x(1,2), ...), 6 bits per byte offset by 63. Ends with '\n'.
std::string to_graph6(const Graph& g);
std::string to_graph6(const EdgeList& edges);
EdgeList parse_graph6(std::string_view text);

/// "p edge V E" followed by "e i j" lines with 1-based ids.
std::string to_dimacs(const Graph& g);
EdgeList parse_dimacs(std::string_view text);

/// Line i is the one-line serialization of vertex i.
std::string vertex_labels(const Graph& g);

EdgeList edge_list(const Graph& g);

}  // namespace grasscode
