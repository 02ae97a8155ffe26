#include "pebble/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pebble {

namespace {

// Iterated refinement: signature of a vertex is (own color, sorted multiset of
// neighbor colors); new color ids are ranks of the sorted distinct signatures,
// which makes the numbering isomorphism-invariant. Refinement only splits
// classes, so it is stable once the class count stops growing.
std::vector<int> refine_colors(const Graph& g, std::vector<int> colors) {
  const int n = g.order();
  int classes = static_cast<int>(
      std::map<int, int>(/*empty*/ {}).size());  // recomputed below
  {
    std::vector<int> tmp = colors;
    std::sort(tmp.begin(), tmp.end());
    classes = static_cast<int>(std::unique(tmp.begin(), tmp.end()) - tmp.begin());
  }
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(colors[v]);
      for (VertexId w : g.neighbors(v)) sig[v].push_back(colors[w]);
      std::sort(sig[v].begin() + 1, sig[v].end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    for (int v = 0; v < n; ++v)
      colors[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
          distinct.begin());
    const int new_classes = static_cast<int>(distinct.size());
    if (new_classes == classes) break;
    classes = new_classes;
  }
  return colors;
}

// Minimum adjacency bitstring over permutations that respect the refined
// color blocks. Rows are appended position by position and compared against
// the incumbent; branches that can only produce a larger string are pruned.
// Twin vertices (identical adjacency outside the pair) generate isomorphic
// subtrees, so only one representative per twin class is tried at each node.
class MinAdjacencySearch {
public:
  MinAdjacencySearch(const Graph& g,
                     const std::vector<std::vector<int>>& blocks)
      : n_(g.order()), blocks_(blocks) {
    adj_.assign(n_ * n_, 0);
    for (auto [u, v] : g.edges()) {
      adj_[u * n_ + v] = 1;
      adj_[v * n_ + u] = 1;
    }
    for (std::size_t ci = 0; ci < blocks_.size(); ++ci)
      for (std::size_t j = 0; j < blocks_[ci].size(); ++j)
        pos_class_.push_back(static_cast<int>(ci));
    used_.assign(n_, 0);
    perm_.assign(n_, -1);
    twin_.resize(n_);
    std::iota(twin_.begin(), twin_.end(), 0);
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < u; ++v)
        if (twin_[v] == v && is_twin(u, v)) {
          twin_[u] = v;
          break;
        }
  }

  std::vector<char> run() {
    cur_.reserve(n_ * (n_ - 1) / 2);
    dfs(0);
    return best_;
  }

private:
  bool is_twin(int u, int v) const {
    for (int w = 0; w < n_; ++w) {
      if (w == u || w == v) continue;
      if (adj_[u * n_ + w] != adj_[v * n_ + w]) return false;
    }
    return true;
  }

  // -1 / 0 / +1 against the incumbent over the current prefix.
  int compare_prefix() const {
    for (std::size_t i = 0; i < cur_.size(); ++i) {
      if (cur_[i] != best_[i]) return cur_[i] < best_[i] ? -1 : 1;
    }
    return 0;
  }

  void dfs(int p) {
    if (p == n_) {
      if (!have_best_ || compare_prefix() < 0) {
        best_ = cur_;
        have_best_ = true;
      }
      return;
    }
    std::vector<char> twin_tried(n_, 0);
    for (int w : blocks_[pos_class_[p]]) {
      if (used_[w]) continue;
      if (twin_tried[twin_[w]]) continue;
      twin_tried[twin_[w]] = 1;
      const std::size_t row_start = cur_.size();
      for (int i = 0; i < p; ++i) cur_.push_back(adj_[perm_[i] * n_ + w]);
      if (!have_best_ || compare_prefix() <= 0) {
        used_[w] = 1;
        perm_[p] = w;
        dfs(p + 1);
        used_[w] = 0;
      }
      cur_.resize(row_start);
    }
  }

  int n_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> pos_class_;
  std::vector<char> adj_;
  std::vector<char> used_;
  std::vector<int> perm_;
  std::vector<int> twin_;
  std::vector<char> cur_;
  std::vector<char> best_;
  bool have_best_ = false;
};

}  // namespace

std::string canonical_form(const Graph& g, const std::vector<int>& colors) {
  const int n = g.order();
  if (n > kCanonicalMaxOrder)
    throw Error("canonical_form is capped at n <= " +
                std::to_string(kCanonicalMaxOrder) + " (got n = " +
                std::to_string(n) + ")");
  if (static_cast<int>(colors.size()) != n)
    throw Error("color vector length must equal the graph order");

  std::vector<int> refined = refine_colors(g, colors);
  const int classes = 1 + *std::max_element(refined.begin(), refined.end());
  std::vector<std::vector<int>> blocks(classes);
  for (int v = 0; v < n; ++v) blocks[refined[v]].push_back(v);

  // Every refined class carries a uniform initial color; record it so colored
  // keys differ whenever the colorings are structurally different.
  std::string key = "n" + std::to_string(n) + ";";
  for (const auto& b : blocks) {
    key += "(" + std::to_string(b.size()) + "," +
           std::to_string(colors[b.front()]) + ")";
  }
  key += ";";
  MinAdjacencySearch search(g, blocks);
  for (char bit : search.run()) key += bit ? '1' : '0';
  return key;
}

std::string canonical_form(const Graph& g) {
  return canonical_form(g, std::vector<int>(g.order(), 0));
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<VertexId> vertex_orbits(const Graph& g) {
  const int n = g.order();
  std::map<std::string, VertexId> seen;
  std::vector<VertexId> orbit(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> colors(n, 0);
    colors[v] = 1;
    auto key = canonical_form(g, colors);
    auto [it, inserted] = seen.emplace(std::move(key), v);
    orbit[v] = it->second;
  }
  return orbit;
}

}  // namespace pebble
