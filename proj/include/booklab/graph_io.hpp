#pragma once

#include <string>
#include <string_view>

#include "booklab/graph.hpp"

namespace booklab {

/// graph6: order header (one byte n+63 for n <= 62, else 126 plus three
/// 6-bit bytes), then the column-major upper triangle packed six bits per
/// byte, each byte offset by 63, zero-padded at the end.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

/// "n\nu v\n..." with 0-based vertices, edges sorted with u < v.
std::string to_edge_list(const Graph& g);
/// Accepts the edge-list text; blank lines and '#' comments are skipped.
Graph from_edge_list(std::string_view text);

enum class GraphFormat { kAuto, kGraph6, kEdgeList };

/// Decodes text in the given format; kAuto picks edge-list when the first
/// non-blank token is all digits, graph6 otherwise.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::kAuto);
std::string format_graph(const Graph& g, GraphFormat format);

}  // namespace booklab
