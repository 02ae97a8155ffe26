#include "pebble/configuration.hpp"

namespace pebble {

Configuration::Configuration(std::vector<int> counts)
    : counts_(std::move(counts)) {
  for (int c : counts_)
    if (c < 0) throw Error("pebble counts must be nonnegative");
}

long long Configuration::size() const noexcept {
  long long s = 0;
  for (int c : counts_) s += c;
  return s;
}

Configuration apply_move(const Graph& g, const Configuration& c, Move m) {
  if (c.order() != g.order())
    throw Error("configuration length does not match the graph order");
  if (!g.adjacent(m.from, m.to))
    throw Error("illegal move: " + std::to_string(m.from) + " and " +
                std::to_string(m.to) + " are not adjacent");
  if (c[m.from] < 2)
    throw Error("illegal move: vertex " + std::to_string(m.from) +
                " holds fewer than two pebbles");
  Configuration out = c;
  out[m.from] -= 2;
  out[m.to] += 1;
  return out;
}

Configuration replay_moves(const Graph& g, Configuration c,
                           const std::vector<Move>& moves) {
  for (Move m : moves) c = apply_move(g, c, m);
  return c;
}

bool covers_all(const Configuration& c) {
  for (int x : c.counts())
    if (x < 1) return false;
  return true;
}

}  // namespace pebble
