#pragma once

#include <compare>
#include <vector>

#include "pebble/graph.hpp"

namespace pebble {

/// Per-vertex nonnegative pebble counts. The total size is always recomputed
/// from the counts, never cached.
class Configuration {
public:
  Configuration() = default;
  explicit Configuration(int order) : counts_(order, 0) {}
  explicit Configuration(std::vector<int> counts);

  int order() const noexcept { return static_cast<int>(counts_.size()); }
  long long size() const noexcept;

  int operator[](VertexId v) const { return counts_[v]; }
  int& operator[](VertexId v) { return counts_[v]; }

  const std::vector<int>& counts() const noexcept { return counts_; }

  bool operator==(const Configuration&) const = default;
  auto operator<=>(const Configuration&) const = default;  // lexicographic

private:
  std::vector<int> counts_;
};

struct Move {
  VertexId from;
  VertexId to;
  bool operator==(const Move&) const = default;
};

/// One pebbling step: removes two pebbles from m.from, adds one to m.to.
/// Throws Error unless m is an edge of g and c[m.from] >= 2.
Configuration apply_move(const Graph& g, const Configuration& c, Move m);

/// Applies a move sequence, validating every step.
Configuration replay_moves(const Graph& g, Configuration c,
                           const std::vector<Move>& moves);

inline bool meets_target(const Configuration& c, VertexId r, long long t) {
  return c[r] >= t;
}

/// Every vertex holds at least one pebble.
bool covers_all(const Configuration& c);

}  // namespace pebble
