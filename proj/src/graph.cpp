#include "pebble/graph.hpp"

#include <algorithm>
#include <queue>

namespace pebble {

Graph::Graph(int order, std::vector<std::pair<VertexId, VertexId>> edges,
             std::string family_tag)
    : n_(order), family_(std::move(family_tag)) {
  if (order < 1) throw Error("graph order must be at least 1");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw Error("edge endpoint out of range");
    if (u == v) throw Error("self-loops are not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw Error("duplicate edge");
  edges_ = std::move(edges);

  adj_.assign(n_, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());

  dist_.assign(n_, std::vector<int>(n_, -1));
  std::vector<VertexId> queue;
  queue.reserve(n_);
  for (VertexId s = 0; s < n_; ++s) {
    auto& d = dist_[s];
    d[s] = 0;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId u = queue[head];
      for (VertexId v : adj_[u]) {
        if (d[v] < 0) {
          d[v] = d[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  connected_ = true;
  for (int v : dist_[0])
    if (v < 0) connected_ = false;
}

void Graph::check_vertex(VertexId v) const {
  if (v < 0 || v >= n_) throw Error("vertex index out of range");
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(VertexId v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::distance(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return dist_[u][v];
}

int Graph::eccentricity(VertexId v) const {
  require_connected("eccentricity");
  check_vertex(v);
  int e = 0;
  for (int d : dist_[v]) e = std::max(e, d);
  return e;
}

int Graph::diameter() const {
  require_connected("diameter");
  int d = 0;
  for (VertexId v = 0; v < n_; ++v) d = std::max(d, eccentricity(v));
  return d;
}

void Graph::require_connected(const char* what) const {
  if (!connected_)
    throw Error(std::string(what) + " requires a connected graph (got " +
                (family_.empty() ? std::string("anonymous graph") : family_) +
                ")");
}

Metrics metrics(const Graph& g) {
  g.require_connected("metrics");
  Metrics m;
  m.eccentricity.resize(g.order());
  m.diameter = 0;
  for (VertexId v = 0; v < g.order(); ++v) {
    m.eccentricity[v] = g.eccentricity(v);
    m.diameter = std::max(m.diameter, m.eccentricity[v]);
  }
  return m;
}

}  // namespace pebble
