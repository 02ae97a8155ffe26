#include "oracle.hpp"

#include <algorithm>
#include <set>

namespace pebble::oracle {

std::vector<Configuration> reachable(const Graph& g, const Configuration& c) {
  std::set<std::vector<int>> seen;
  std::vector<Configuration> out;
  std::vector<Configuration> frontier{c};
  seen.insert(c.counts());
  while (!frontier.empty()) {
    std::vector<Configuration> next;
    for (const Configuration& cur : frontier) {
      out.push_back(cur);
      for (VertexId u = 0; u < g.order(); ++u) {
        if (cur[u] < 2) continue;
        for (VertexId v : g.neighbors(u)) {
          Configuration moved = apply_move(g, cur, Move{u, v});
          if (seen.insert(moved.counts()).second) next.push_back(moved);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

bool t_solvable(const Graph& g, const Configuration& c, VertexId r,
                long long t) {
  for (const Configuration& s : reachable(g, c))
    if (s[r] >= t) return true;
  return false;
}

bool cover_solvable(const Graph& g, const Configuration& c) {
  for (const Configuration& s : reachable(g, c))
    if (covers_all(s)) return true;
  return false;
}

long long max_deliverable(const Graph& g, const Configuration& c, VertexId r) {
  long long best = 0;
  for (const Configuration& s : reachable(g, c))
    best = std::max<long long>(best, s[r]);
  return best;
}

std::vector<std::vector<int>> configurations_of_size(int n, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  // assign counts vertex by vertex, ascending lexicographic order
  auto rec = [&](auto&& self, int v, int remaining) -> void {
    if (v == n - 1) {
      cur[v] = remaining;
      out.push_back(cur);
      cur[v] = 0;
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      cur[v] = c;
      self(self, v + 1, remaining - c);
    }
    cur[v] = 0;
  };
  rec(rec, 0, size);
  return out;
}

long long rooted_pi(const Graph& g, VertexId r, long long t) {
  long long ceiling = t - 1;
  for (VertexId v = 0; v < g.order(); ++v)
    if (v != r) ceiling += t * (1LL << g.distance(v, r)) - 1;
  long long max_unsolvable = 0;  // the empty configuration
  for (long long s = 1; s <= ceiling; ++s)
    for (const auto& counts : configurations_of_size(g.order(), (int)s))
      if (!t_solvable(g, Configuration(counts), r, t))
        max_unsolvable = std::max(max_unsolvable, s);
  return max_unsolvable + 1;
}

long long gamma(const Graph& g) {
  // A non-coverable configuration has C[v] <= s_v - 1 for every v, where
  // s_v = sum_u 2^{d(u,v)}: a stack of s_v at v covers the whole graph by
  // relaying 2^{d(u,v)} pebbles to each u independently. Enumerate that box.
  const int n = g.order();
  std::vector<int> caps(n);
  for (VertexId v = 0; v < n; ++v) {
    long long s = 0;
    for (VertexId u = 0; u < n; ++u) s += 1LL << g.distance(u, v);
    caps[v] = static_cast<int>(s - 1);
  }
  long long max_unsolvable = 0;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, int v, long long size) -> void {
    if (v == n) {
      if (size > max_unsolvable && !cover_solvable(g, Configuration(cur)))
        max_unsolvable = size;
      return;
    }
    for (int c = 0; c <= caps[v]; ++c) {
      cur[v] = c;
      self(self, v + 1, size + c);
    }
    cur[v] = 0;
  };
  rec(rec, 0, 0);
  return max_unsolvable + 1;
}

long long pistar(const Graph& g) {
  for (long long m = 1;; ++m) {
    for (const auto& counts : configurations_of_size(g.order(), (int)m)) {
      const Configuration c(counts);
      bool all = true;
      for (VertexId r = 0; r < g.order() && all; ++r)
        all = t_solvable(g, c, r, 1);
      if (all) return m;
    }
  }
}

std::vector<Graph> all_connected_graphs(int n) {
  std::vector<std::pair<VertexId, VertexId>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask & (1u << i)) edges.push_back(slots[i]);
    Graph g(n, std::move(edges));
    if (g.connected()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace pebble::oracle
