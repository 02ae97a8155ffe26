#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pebble/error.hpp"

namespace pebble {

using VertexId = int;

/// Immutable simple graph with an eagerly computed all-pairs distance matrix.
///
/// Vertices are indexed 0..order()-1. Distances are hop counts; -1 marks an
/// unreachable pair (only edgeless graphs built as product operands are ever
/// disconnected; every solver entry point rejects them). Instances are safe to
/// share across threads without synchronization.
class Graph {
public:
  Graph(int order, std::vector<std::pair<VertexId, VertexId>> edges,
        std::string family_tag = "");

  int order() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  /// Edges normalized to u < v and sorted lexicographically.
  const std::vector<std::pair<VertexId, VertexId>>& edges() const noexcept {
    return edges_;
  }

  const std::vector<VertexId>& neighbors(VertexId v) const;
  int degree(VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const;

  /// Hop distance, or -1 when unreachable.
  int distance(VertexId u, VertexId v) const;

  bool connected() const noexcept { return connected_; }
  int eccentricity(VertexId v) const;
  int diameter() const;

  /// Human-readable provenance, e.g. "book(3)" or "corona(complete(3),complete(1))".
  const std::string& family() const noexcept { return family_; }

  /// Throws Error mentioning `what` when the graph is disconnected.
  void require_connected(const char* what) const;

private:
  void check_vertex(VertexId v) const;

  int n_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::vector<int>> dist_;
  std::string family_;
  bool connected_;
};

struct Metrics {
  int diameter;
  std::vector<int> eccentricity;  // indexed by vertex
};

/// Diameter and per-vertex eccentricities; requires a connected graph.
Metrics metrics(const Graph& g);

}  // namespace pebble
