#pragma once

#include <iosfwd>
#include <string>

#include "curvex/graph.hpp"

namespace curvex {

/// Parses {"n": <int>, "edges": [[u,v], ...]} with 0-based vertices.
/// Either endpoint order and duplicate edges are tolerated (the graph is
/// normalized); loops and out-of-range endpoints are rejected.
Graph graph_from_json(const std::string& text);
Graph read_graph_json(std::istream& in);

/// Reads a graph from a file path, or from standard input when path is "-".
Graph load_graph(const std::string& path);

/// Serializes in the same schema, edges normalized and sorted. Stable bytes
/// for identical graphs.
std::string graph_to_json(const Graph& g);
void write_graph_json(const Graph& g, std::ostream& out);

}  // namespace curvex
