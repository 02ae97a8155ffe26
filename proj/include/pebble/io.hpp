#pragma once

#include <string>

#include "pebble/graph.hpp"

namespace pebble {

/// GraphViz serialization: exactly |V| node lines and |E| edge lines.
std::string to_dot(const Graph& g);

/// Edge-list JSON: {"order": n, "family": tag, "edges": [[u,v], ...]}.
std::string to_edge_list_json(const Graph& g);

/// Parses edge-list JSON as emitted by to_edge_list_json. The result may be
/// disconnected; solver entry points still reject disconnected graphs.
Graph graph_from_edge_list_json(const std::string& text);

}  // namespace pebble
