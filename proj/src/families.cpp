#include "pebble/families.hpp"

#include <algorithm>
#include <cctype>

namespace pebble {

namespace {

using Edges = std::vector<std::pair<VertexId, VertexId>>;

void require_param(bool ok, const std::string& what) {
  if (!ok) throw Error("parameter out of range: " + what);
}

std::string tag(const char* name, int k) {
  return std::string(name) + "(" + std::to_string(k) + ")";
}

}  // namespace

Graph build_path(int k) {
  require_param(k >= 1, "path(k) needs k >= 1");
  Edges e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return Graph(k, std::move(e), tag("path", k));
}

Graph build_cycle(int k) {
  require_param(k >= 3, "cycle(k) needs k >= 3");
  Edges e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return Graph(k, std::move(e), tag("cycle", k));
}

Graph build_complete(int k) {
  require_param(k >= 1, "complete(k) needs k >= 1");
  Edges e;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
  return Graph(k, std::move(e), tag("complete", k));
}

Graph build_star(int k) {
  require_param(k >= 1, "star(k) needs k >= 1");
  Edges e;
  for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
  return Graph(k + 1, std::move(e), tag("star", k));
}

Graph build_edgeless(int k) {
  require_param(k >= 1, "edgeless(k) needs k >= 1");
  return Graph(k, {}, tag("edgeless", k));
}

Graph build_hypercube(int d) {
  require_param(d >= 1 && d <= 20, "hypercube(d) needs 1 <= d <= 20");
  const int n = 1 << d;
  Edges e;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b)
      if (!(v & (1 << b))) e.emplace_back(v, v | (1 << b));
  return Graph(n, std::move(e), tag("hypercube", d));
}

Graph build_friendship(int n) {
  require_param(n >= 1, "friendship(n) needs n >= 1");
  Edges e;
  for (int i = 0; i < n; ++i) {
    int a = 2 * i + 1, b = 2 * i + 2;
    e.emplace_back(0, a);
    e.emplace_back(0, b);
    e.emplace_back(a, b);
  }
  return Graph(2 * n + 1, std::move(e), tag("friendship", n));
}

Graph build_book(int n) {
  require_param(n >= 1, "book(n) needs n >= 1");
  Edges e;
  e.emplace_back(0, 1);  // hub edge u-v
  for (int i = 1; i <= n; ++i) {
    int a = 2 * i, b = 2 * i + 1;
    e.emplace_back(0, a);
    e.emplace_back(1, b);
    e.emplace_back(a, b);
  }
  return Graph(2 * n + 2, std::move(e), tag("book", n));
}

Graph build_family(std::string_view name, int k) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "path") return build_path(k);
  if (lower == "cycle") return build_cycle(k);
  if (lower == "complete") return build_complete(k);
  if (lower == "star") return build_star(k);
  if (lower == "edgeless") return build_edgeless(k);
  if (lower == "hypercube") return build_hypercube(k);
  if (lower == "friendship") return build_friendship(k);
  if (lower == "book") return build_book(k);
  throw Error("unknown family: " + lower);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  g.require_connected("cartesian product (first operand)");
  h.require_connected("cartesian product (second operand)");
  const int gn = g.order(), hn = h.order();
  Edges e;
  for (int a = 0; a < gn; ++a)
    for (auto [x, y] : h.edges()) e.emplace_back(a * hn + x, a * hn + y);
  for (auto [a, b] : g.edges())
    for (int x = 0; x < hn; ++x) e.emplace_back(a * hn + x, b * hn + x);
  return Graph(gn * hn, std::move(e),
               "cartesian(" + g.family() + "," + h.family() + ")");
}

Graph corona(const Graph& g, const Graph& h) {
  g.require_connected("corona (first operand)");
  const int gn = g.order(), hn = h.order();
  Edges e = g.edges();
  for (int i = 0; i < gn; ++i) {
    const int base = gn + i * hn;
    for (auto [x, y] : h.edges()) e.emplace_back(base + x, base + y);
    for (int x = 0; x < hn; ++x) e.emplace_back(i, base + x);
  }
  return Graph(gn + gn * hn, std::move(e),
               "corona(" + g.family() + "," + h.family() + ")");
}

Graph neighbourhood_corona(const Graph& g, const Graph& h) {
  g.require_connected("neighbourhood corona (first operand)");
  if (g.order() < 2)
    throw Error(
        "neighbourhood corona needs |V(G)| >= 2: K_1 has no neighbours, the "
        "copies would be disconnected");
  const int gn = g.order(), hn = h.order();
  Edges e = g.edges();
  for (int i = 0; i < gn; ++i) {
    const int base = gn + i * hn;
    for (auto [x, y] : h.edges()) e.emplace_back(base + x, base + y);
    for (VertexId w : g.neighbors(i))
      for (int x = 0; x < hn; ++x) e.emplace_back(w, base + x);
  }
  return Graph(gn + gn * hn, std::move(e),
               "ncorona(" + g.family() + "," + h.family() + ")");
}

}  // namespace pebble
