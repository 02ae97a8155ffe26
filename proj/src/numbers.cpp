#include "pebble/numbers.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <functional>
#include <limits>

#include "pebble/canonical.hpp"
#include "pebble/detail/parallel.hpp"

namespace pebble {

using detail::effective_workers;
using detail::run_parallel;

namespace {

int clamp_cap(long long v) {
  return static_cast<int>(std::min<long long>(v, INT_MAX / 4));
}

long long pow2_capped(int e) {
  if (e >= 62) return std::numeric_limits<long long>::max() / 2;
  return 1LL << e;
}

std::vector<int> rooted_caps(const Graph& g, VertexId r, long long t) {
  std::vector<int> caps(g.order());
  for (VertexId v = 0; v < g.order(); ++v) {
    if (v == r) {
      caps[v] = clamp_cap(t - 1);
    } else {
      const int d = g.distance(v, r);
      long long thr = (t > pow2_capped(62) / pow2_capped(d))
                          ? std::numeric_limits<long long>::max() / 2
                          : t * pow2_capped(d);
      caps[v] = clamp_cap(thr - 1);
    }
  }
  return caps;
}

// Depth-first enumeration of the unsolvable region inside a per-vertex box.
// Pebbles are added in nondecreasing vertex order so every configuration is
// visited once; a solvable configuration is never extended (solvability is
// monotone under pebble addition), and the unsolvable region is downward
// closed, so every maximal unsolvable configuration is reached. Tracks the
// maximum-size unsolvable configuration, lexicographically smallest on ties.
class MaxUnsolvableSearch {
public:
  MaxUnsolvableSearch(const Graph& g, std::vector<int> caps, SolveContext& ctx,
                      Budget budget)
      : g_(g),
        caps_(std::move(caps)),
        ctx_(ctx),
        budget_(budget),
        start_(std::chrono::steady_clock::now()) {}

  RunStatus run() {
    cur_.assign(g_.order(), 0);
    const SolveVerdict root = ctx_.solve(Configuration(cur_));
    if (root.outcome == Outcome::Limit) return RunStatus::Limit;
    if (root.outcome == Outcome::Solvable) return RunStatus::Complete;
    dfs(0, 0);
    return limit_ ? RunStatus::Limit : RunStatus::Complete;
  }

  long long best_size() const { return best_size_; }
  const std::vector<int>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  bool over_budget() {
    if (ctx_.states_used() + nodes_ > budget_.max_states) return true;
    if (budget_.max_seconds > 0 && (nodes_ & 0x3FF) == 0) {
      const auto elapsed = std::chrono::steady_clock::now() - start_;
      if (std::chrono::duration<double>(elapsed).count() > budget_.max_seconds)
        return true;
    }
    return false;
  }

  void dfs(int vmin, long long size) {
    ++nodes_;
    if (over_budget()) {
      limit_ = true;
      return;
    }
    if (size > best_size_ || (size == best_size_ && cur_ < best_)) {
      best_size_ = size;
      best_ = cur_;
    }
    for (int u = vmin; u < g_.order(); ++u) {
      if (cur_[u] >= caps_[u]) continue;
      ++cur_[u];
      const SolveVerdict v = ctx_.solve(Configuration(cur_));
      if (v.outcome == Outcome::Limit) {
        limit_ = true;
      } else if (v.outcome == Outcome::Unsolvable) {
        dfs(u, size + 1);
      }
      --cur_[u];
      if (limit_) return;
    }
  }

  const Graph& g_;
  std::vector<int> caps_;
  SolveContext& ctx_;
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::vector<int> cur_;
  std::vector<int> best_;
  long long best_size_ = -1;
  std::uint64_t nodes_ = 0;
  bool limit_ = false;
};

}  // namespace

RootedResult rooted_pebbling_number(const Graph& g, VertexId r, long long t,
                                    Budget budget) {
  g.require_connected("rooted pebbling number");
  if (r < 0 || r >= g.order()) throw Error("target vertex out of range");
  if (t < 1) throw Error("fold count t must be at least 1");

  RootedResult out;
  SolveContext ctx = SolveContext::for_target(g, r, t, budget);
  MaxUnsolvableSearch search(g, rooted_caps(g, r, t), ctx, budget);
  if (search.run() == RunStatus::Limit) {
    out.status = RunStatus::Limit;
    out.states = ctx.states_used() + search.nodes();
    return out;
  }
  out.value = search.best_size() + 1;
  out.witness = Configuration(search.best());

  // Independent re-check of the witness through a fresh context.
  const SolveVerdict check = is_t_solvable(g, out.witness, r, t, budget);
  if (check.outcome == Outcome::Solvable)
    throw Error("internal error: extremal witness re-verified as solvable");
  out.states = ctx.states_used() + search.nodes() + check.explored;
  if (check.outcome == Outcome::Limit) out.status = RunStatus::Limit;
  return out;
}

QuantityResult pebbling_number(const Graph& g, long long t,
                               const ComputeOptions& opts) {
  g.require_connected("pebbling number");
  const int n = g.order();

  std::vector<VertexId> orbit(n);
  if (opts.symmetry && n <= kCanonicalMaxOrder) {
    orbit = vertex_orbits(g);
  } else {
    for (int v = 0; v < n; ++v) orbit[v] = v;
  }
  std::vector<VertexId> reps;
  for (int v = 0; v < n; ++v)
    if (orbit[v] == v) reps.push_back(v);

  std::vector<RootedResult> rooted(reps.size());
  run_parallel(effective_workers(opts.workers), static_cast<int>(reps.size()),
               [&](int i) {
                 rooted[i] = rooted_pebbling_number(g, reps[i], t, opts.budget);
               });

  QuantityResult out;
  out.kind = QuantityKind::PiT;
  out.t = static_cast<int>(t);
  for (const auto& rr : rooted) out.states += rr.states;
  for (const auto& rr : rooted)
    if (rr.status == RunStatus::Limit) {
      out.status = RunStatus::Limit;
      return out;
    }

  std::vector<int> rep_index(n, -1);
  for (std::size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = (int)i;
  out.rooted_values.resize(n);
  for (int v = 0; v < n; ++v)
    out.rooted_values[v] = rooted[rep_index[orbit[v]]].value;

  out.value = *std::max_element(out.rooted_values.begin(),
                                out.rooted_values.end());
  for (int v = 0; v < n; ++v)
    if (out.rooted_values[v] == out.value) {
      out.extremal_target = v;
      break;
    }

  if (rep_index[out.extremal_target] >= 0) {
    out.witness = rooted[rep_index[out.extremal_target]].witness;
  } else {
    RootedResult rr =
        rooted_pebbling_number(g, out.extremal_target, t, opts.budget);
    out.states += rr.states;
    if (rr.status == RunStatus::Limit) {
      out.status = RunStatus::Limit;
      return out;
    }
    out.witness = rr.witness;
  }
  out.has_witness = true;
  return out;
}

long long stacking_value(const Graph& g, VertexId v) {
  g.require_connected("stacking value");
  long long s = 0;
  for (VertexId u = 0; u < g.order(); ++u) s += pow2_capped(g.distance(u, v));
  return s;
}

long long cover_pebbling_stacking(const Graph& g) {
  return stacking_value(g, stacking_best_vertex(g));
}

VertexId stacking_best_vertex(const Graph& g) {
  g.require_connected("cover pebbling");
  VertexId best = 0;
  long long best_value = stacking_value(g, 0);
  for (VertexId v = 1; v < g.order(); ++v) {
    const long long s = stacking_value(g, v);
    if (s > best_value) {
      best_value = s;
      best = v;
    }
  }
  return best;
}

QuantityResult cover_pebbling_search(const Graph& g,
                                     const ComputeOptions& opts) {
  g.require_connected("cover pebbling search");
  QuantityResult out;
  out.kind = QuantityKind::Gamma;

  std::vector<int> caps(g.order());
  for (VertexId v = 0; v < g.order(); ++v)
    caps[v] = clamp_cap(stacking_value(g, v) - 1);

  SolveContext ctx = SolveContext::for_cover(g, opts.budget);
  MaxUnsolvableSearch search(g, std::move(caps), ctx, opts.budget);
  if (search.run() == RunStatus::Limit) {
    out.status = RunStatus::Limit;
    out.states = ctx.states_used() + search.nodes();
    return out;
  }
  out.value = search.best_size() + 1;
  out.witness = Configuration(search.best());
  out.has_witness = true;

  const SolveVerdict check = is_cover_solvable(g, out.witness, opts.budget);
  if (check.outcome == Outcome::Solvable)
    throw Error("internal error: extremal witness re-verified as solvable");
  out.states = ctx.states_used() + search.nodes() + check.explored;
  if (check.outcome == Outcome::Limit) out.status = RunStatus::Limit;
  return out;
}

QuantityResult optimal_pebbling_number(const Graph& g,
                                       const ComputeOptions& opts) {
  g.require_connected("optimal pebbling number");
  const int n = g.order();

  QuantityResult out;
  out.kind = QuantityKind::PiStar;

  int radius = INT_MAX;
  for (VertexId v = 0; v < n; ++v) radius = std::min(radius, g.eccentricity(v));
  const long long m_max = pow2_capped(radius);  // a center stack of this size
                                                // solves every target

  std::vector<SolveContext> contexts;
  contexts.reserve(n);
  for (VertexId r = 0; r < n; ++r)
    contexts.push_back(SolveContext::for_target(g, r, 1, opts.budget));

  const auto start = std::chrono::steady_clock::now();
  std::uint64_t configs_tested = 0;
  std::vector<int> cur(n, 0);
  std::vector<int> witness;
  bool limit = false;

  auto solves_every_target = [&](const std::vector<int>& counts) {
    ++configs_tested;
    std::uint64_t states = configs_tested;
    for (auto& c : contexts) states += c.states_used();
    if (states > opts.budget.max_states) limit = true;
    if (opts.budget.max_seconds > 0 && (configs_tested & 0xFF) == 0) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      if (std::chrono::duration<double>(elapsed).count() >
          opts.budget.max_seconds)
        limit = true;
    }
    if (limit) return false;
    const Configuration probe(counts);
    for (VertexId r = 0; r < n; ++r) {
      const SolveVerdict verdict = contexts[r].solve(probe);
      if (verdict.outcome == Outcome::Limit) limit = true;
      if (verdict.outcome != Outcome::Solvable) return false;
    }
    return true;
  };

  // Descending lexicographic enumeration of all size-m configurations; the
  // first success is the reported witness.
  std::function<bool(int, long long)> assign = [&](int v,
                                                   long long remaining) -> bool {
    if (v == n - 1) {
      cur[v] = static_cast<int>(remaining);
      const bool hit = solves_every_target(cur);
      if (hit) witness = cur;
      cur[v] = 0;
      return hit;
    }
    for (long long c = remaining; c >= 0; --c) {
      cur[v] = static_cast<int>(c);
      if (assign(v + 1, remaining - c)) {
        cur[v] = 0;
        return true;
      }
      if (limit) break;
    }
    cur[v] = 0;
    return false;
  };

  for (long long m = 1; m <= m_max; ++m) {
    if (assign(0, m)) {
      out.value = m;
      break;
    }
    if (limit) {
      out.status = RunStatus::Limit;
      break;
    }
  }

  for (auto& c : contexts) out.states += c.states_used();
  out.states += configs_tested;
  if (out.status == RunStatus::Limit) return out;
  if (out.value > 0) {
    out.witness = Configuration(witness);
    out.has_witness = true;
  }
  return out;
}

QuantityResult classify(const Graph& g, const ComputeOptions& opts) {
  QuantityResult out = pebbling_number(g, 1, opts);
  out.kind = QuantityKind::ClassLabel;
  if (out.status == RunStatus::Limit) return out;
  const long long n = g.order();
  if (out.value == n)
    out.label = "Class 0";
  else if (out.value == n + 1)
    out.label = "Class 1";
  else
    out.label = "pi - n = " + std::to_string(out.value - n);
  out.diam2_theorem_applies = (g.diameter() == 2);
  return out;
}

}  // namespace pebble
