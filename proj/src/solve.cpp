#include "pebble/solve.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstring>
#include <limits>

namespace pebble {

namespace {

struct MixHash {
  std::size_t operator()(std::uint64_t x) const noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

long long threshold_for(long long t, int dist) {
  if (dist >= 62) return std::numeric_limits<long long>::max();
  if (t > (std::numeric_limits<long long>::max() >> dist))
    return std::numeric_limits<long long>::max();
  return t << dist;
}

}  // namespace

struct SolveContext::Impl {
  const Graph* g = nullptr;
  bool cover_goal = false;
  VertexId target = -1;
  long long t = 1;
  Budget budget;
  std::chrono::steady_clock::time_point start;

  // States are keyed by the exact count vector: packed into a uint64 when
  // n * bits fits, serialized to bytes otherwise. bits grows monotonically;
  // growth invalidates (clears) the cache, never its soundness.
  int bits = 0;
  bool packed = true;
  std::unordered_set<std::uint64_t, MixHash> failed_packed;
  std::unordered_set<std::string> failed_bytes;
  std::uint64_t explored = 0;

  std::vector<int> dist_to_target;
  std::vector<VertexId> relay_parent;

  void init_target_tables() {
    const int n = g->order();
    dist_to_target.resize(n);
    relay_parent.assign(n, -1);
    for (int v = 0; v < n; ++v) dist_to_target[v] = g->distance(v, target);
    for (int v = 0; v < n; ++v) {
      if (v == target) continue;
      for (VertexId w : g->neighbors(v)) {
        if (dist_to_target[w] == dist_to_target[v] - 1) {
          relay_parent[v] = w;  // neighbors ascend, so first hit is smallest
          break;
        }
      }
    }
  }

  void ensure_capacity(long long max_count) {
    const int need =
        std::max(1, static_cast<int>(std::bit_width(
                        static_cast<unsigned long long>(std::max(1LL, max_count)))));
    if (need <= bits) return;
    bits = need;
    packed = static_cast<long long>(g->order()) * bits <= 64;
    failed_packed.clear();
    failed_bytes.clear();
  }

  std::uint64_t pack(const std::vector<int>& counts) const {
    std::uint64_t key = 0;
    int shift = 0;
    for (int c : counts) {
      key |= static_cast<std::uint64_t>(c) << shift;
      shift += bits;
    }
    return key;
  }

  void to_bytes(const std::vector<int>& counts, std::string& out) const {
    const int width = (bits + 7) / 8;
    out.clear();
    out.reserve(counts.size() * width);
    for (int c : counts) {
      unsigned u = static_cast<unsigned>(c);
      for (int b = 0; b < width; ++b) {
        out.push_back(static_cast<char>(u & 0xFF));
        u >>= 8;
      }
    }
  }

  bool failed_contains(const std::vector<int>& counts, std::string& buf) const {
    if (packed) return failed_packed.count(pack(counts)) > 0;
    to_bytes(counts, buf);
    return failed_bytes.count(buf) > 0;
  }

  void mark_failed(const std::vector<int>& counts, std::string& buf) {
    if (packed) {
      failed_packed.insert(pack(counts));
    } else {
      to_bytes(counts, buf);
      failed_bytes.insert(buf);
    }
  }

  bool goal_met(const std::vector<int>& counts) const {
    if (cover_goal) {
      for (int c : counts)
        if (c < 1) return false;
      return true;
    }
    return counts[target] >= t;
  }

  // Vertex whose stack alone relays t pebbles to the target, or -1.
  VertexId threshold_vertex(const std::vector<int>& counts) const {
    if (cover_goal) return -1;
    for (int v = 0; v < static_cast<int>(counts.size()); ++v)
      if (counts[v] >= threshold_for(t, dist_to_target[v])) return v;
    return -1;
  }

  void append_relay(std::vector<Move>& witness, VertexId v) const {
    VertexId cur = v;
    int k = dist_to_target[v];
    for (int i = 0; i < k; ++i) {
      const long long reps = t << (k - 1 - i);
      for (long long j = 0; j < reps; ++j)
        witness.push_back(Move{cur, relay_parent[cur]});
      cur = relay_parent[cur];
    }
  }

  void gen_moves(const std::vector<int>& counts, std::vector<Move>& out) const {
    out.clear();
    const int n = static_cast<int>(counts.size());
    if (!cover_goal) {
      // distance-decreasing moves first (heuristic only)
      for (int u = 0; u < n; ++u)
        if (counts[u] >= 2)
          for (VertexId v : g->neighbors(u))
            if (dist_to_target[v] < dist_to_target[u]) out.push_back({u, v});
      for (int u = 0; u < n; ++u)
        if (counts[u] >= 2)
          for (VertexId v : g->neighbors(u))
            if (dist_to_target[v] >= dist_to_target[u]) out.push_back({u, v});
    } else {
      for (int u = 0; u < n; ++u)
        if (counts[u] >= 2)
          for (VertexId v : g->neighbors(u)) out.push_back({u, v});
    }
  }

  bool over_time() const {
    if (budget.max_seconds <= 0) return false;
    const auto elapsed = std::chrono::steady_clock::now() - start;
    return std::chrono::duration<double>(elapsed).count() > budget.max_seconds;
  }

  SolveVerdict solve(const Configuration& c);
};

SolveVerdict SolveContext::Impl::solve(const Configuration& c) {
  if (c.order() != g->order())
    throw Error("configuration length does not match the graph order");
  g->require_connected(cover_goal ? "cover solvability" : "solvability");

  ensure_capacity(c.size());
  const std::uint64_t explored_before = explored;
  std::vector<int> counts = c.counts();
  std::string buf;
  SolveVerdict verdict;

  auto finish = [&](Outcome o, std::vector<Move> witness = {}) {
    verdict.outcome = o;
    verdict.witness = std::move(witness);
    verdict.explored = explored - explored_before;
    return verdict;
  };

  if (goal_met(counts)) {
    ++explored;
    return finish(Outcome::Solvable);
  }
  if (VertexId v = threshold_vertex(counts); v >= 0) {
    ++explored;
    std::vector<Move> witness;
    append_relay(witness, v);
    return finish(Outcome::Solvable, std::move(witness));
  }
  if (failed_contains(counts, buf)) return finish(Outcome::Unsolvable);
  ++explored;

  struct Frame {
    std::vector<Move> moves;
    std::size_t next = 0;
  };
  std::vector<Frame> frames;
  std::vector<Move> path;
  frames.emplace_back();
  gen_moves(counts, frames.back().moves);

  while (!frames.empty()) {
    Frame& f = frames.back();
    if (f.next == f.moves.size()) {
      mark_failed(counts, buf);
      frames.pop_back();
      if (!path.empty()) {
        Move m = path.back();
        path.pop_back();
        counts[m.from] += 2;
        counts[m.to] -= 1;
      }
      continue;
    }
    const Move m = f.moves[f.next++];
    counts[m.from] -= 2;
    counts[m.to] += 1;
    if (failed_contains(counts, buf)) {
      counts[m.from] += 2;
      counts[m.to] -= 1;
      continue;
    }
    ++explored;
    if ((explored & 0xFFF) == 0 && over_time()) return finish(Outcome::Limit);
    if (explored - explored_before > budget.max_states)
      return finish(Outcome::Limit);
    if (goal_met(counts)) {
      path.push_back(m);
      return finish(Outcome::Solvable, std::move(path));
    }
    if (VertexId v = threshold_vertex(counts); v >= 0) {
      path.push_back(m);
      append_relay(path, v);
      return finish(Outcome::Solvable, std::move(path));
    }
    path.push_back(m);
    frames.emplace_back();
    gen_moves(counts, frames.back().moves);
  }
  return finish(Outcome::Unsolvable);
}

SolveContext::SolveContext(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
SolveContext::SolveContext(SolveContext&&) noexcept = default;
SolveContext& SolveContext::operator=(SolveContext&&) noexcept = default;
SolveContext::~SolveContext() = default;

SolveContext SolveContext::for_target(const Graph& g, VertexId target,
                                      long long t, Budget budget) {
  if (target < 0 || target >= g.order())
    throw Error("target vertex out of range");
  if (t < 1) throw Error("fold count t must be at least 1");
  g.require_connected("solvability");
  auto impl = std::make_unique<Impl>();
  impl->g = &g;
  impl->cover_goal = false;
  impl->target = target;
  impl->t = t;
  impl->budget = budget;
  impl->start = std::chrono::steady_clock::now();
  impl->init_target_tables();
  return SolveContext(std::move(impl));
}

SolveContext SolveContext::for_cover(const Graph& g, Budget budget) {
  g.require_connected("cover solvability");
  auto impl = std::make_unique<Impl>();
  impl->g = &g;
  impl->cover_goal = true;
  impl->budget = budget;
  impl->start = std::chrono::steady_clock::now();
  return SolveContext(std::move(impl));
}

SolveVerdict SolveContext::solve(const Configuration& c) {
  return impl_->solve(c);
}

std::uint64_t SolveContext::states_used() const noexcept {
  return impl_->explored;
}

SolveVerdict is_t_solvable(const Graph& g, const Configuration& c, VertexId r,
                           long long t, Budget budget) {
  return SolveContext::for_target(g, r, t, budget).solve(c);
}

SolveVerdict is_cover_solvable(const Graph& g, const Configuration& c,
                               Budget budget) {
  return SolveContext::for_cover(g, budget).solve(c);
}

DeliveryResult max_deliverable(const Graph& g, const Configuration& c,
                               VertexId r, Budget budget) {
  g.require_connected("max_deliverable");
  if (r < 0 || r >= g.order()) throw Error("target vertex out of range");
  DeliveryResult result;
  const long long size = c.size();
  if (size == 0) return result;  // value 0

  long long lo = 0, hi = size + 1;  // solvable at lo, unsolvable at hi
  while (lo + 1 < hi) {
    const long long mid = lo + (hi - lo) / 2;
    Budget b = budget;
    if (b.max_states <= result.explored) {
      result.status = RunStatus::Limit;
      return result;
    }
    b.max_states -= result.explored;
    SolveVerdict v = is_t_solvable(g, c, r, mid, b);
    result.explored += v.explored;
    if (v.outcome == Outcome::Limit) {
      result.status = RunStatus::Limit;
      return result;
    }
    (v.outcome == Outcome::Solvable ? lo : hi) = mid;
  }
  result.value = lo;
  return result;
}

}  // namespace pebble
