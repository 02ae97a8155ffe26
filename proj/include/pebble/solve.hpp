#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "pebble/configuration.hpp"
#include "pebble/graph.hpp"

namespace pebble {

/// Per-call resource budget. max_states caps the number of distinct
/// configurations visited; max_seconds (0 = unlimited) is a wall-clock cap.
/// Exceeding either yields an explicit Limit outcome, never "unsolvable".
struct Budget {
  std::uint64_t max_states = 50'000'000;
  double max_seconds = 0.0;
};

enum class Outcome { Solvable, Unsolvable, Limit };

struct SolveVerdict {
  Outcome outcome = Outcome::Unsolvable;
  /// Present iff solvable; replaying it from the input configuration is legal
  /// at every step and ends with the goal met.
  std::vector<Move> witness;
  /// Distinct configurations visited by this call (diagnostics).
  std::uint64_t explored = 0;
};

/// Complete decision procedure for one (graph, goal) pair.
///
/// The engine runs a depth-first search with an explicit stack over the move
/// graph (total pebble count strictly decreases per move, so the state space
/// is finite and acyclic). Negative verdicts are cached per context under the
/// exact serialized count vector; no pointwise-dominance shortcuts are used
/// for negative caching. Goal checks per visited state:
///   target goal: success when count[r] >= t, or when some vertex v holds at
///   least t*2^{d(v,r)} pebbles (a greedy shortest-path relay then delivers t);
///   cover goal: success when every vertex holds a pebble.
/// Contexts are reusable across solve() calls with the same goal; they are not
/// shared across different targets.
class SolveContext {
public:
  static SolveContext for_target(const Graph& g, VertexId target, long long t,
                                 Budget budget = {});
  static SolveContext for_cover(const Graph& g, Budget budget = {});

  SolveContext(SolveContext&&) noexcept;
  SolveContext& operator=(SolveContext&&) noexcept;
  ~SolveContext();

  SolveVerdict solve(const Configuration& c);

  /// Total distinct states visited across all solve() calls on this context.
  std::uint64_t states_used() const noexcept;

private:
  struct Impl;
  explicit SolveContext(std::unique_ptr<Impl> impl);
  std::unique_ptr<Impl> impl_;
};

/// Decides whether some move sequence places at least t pebbles on r.
SolveVerdict is_t_solvable(const Graph& g, const Configuration& c, VertexId r,
                           long long t, Budget budget = {});

/// Decides whether some reachable configuration covers every vertex at once.
SolveVerdict is_cover_solvable(const Graph& g, const Configuration& c,
                               Budget budget = {});

enum class RunStatus { Complete, Limit };

struct DeliveryResult {
  RunStatus status = RunStatus::Complete;
  long long value = 0;
  std::uint64_t explored = 0;
};

/// Largest t such that c is t-fold r-solvable (0 when no pebble can reach r).
/// Binary search over t, one solve context per probed t.
DeliveryResult max_deliverable(const Graph& g, const Configuration& c,
                               VertexId r, Budget budget = {});

}  // namespace pebble
