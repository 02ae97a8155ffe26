#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "pebble/families.hpp"
#include "pebble/solve.hpp"

using namespace pebble;

namespace {

Configuration cfg(std::vector<int> counts) {
  return Configuration(std::move(counts));
}

// verdict must replay cleanly and end with the goal met
void check_target_witness(const Graph& g, const Configuration& c, VertexId r,
                          long long t, const SolveVerdict& v) {
  REQUIRE(v.outcome == Outcome::Solvable);
  const Configuration end = replay_moves(g, c, v.witness);
  CHECK(end[r] >= t);
  CHECK(end.size() == c.size() - static_cast<long long>(v.witness.size()));
}

Configuration permute(const Configuration& c, const std::vector<int>& sigma) {
  std::vector<int> out(c.order());
  for (int v = 0; v < c.order(); ++v) out[sigma[v]] = c[v];
  return Configuration(out);
}

}  // namespace

TEST_CASE("apply_move semantics") {
  const Graph p3 = build_path(3);
  CHECK(apply_move(p3, cfg({4, 0, 0}), {0, 1}).counts() ==
        std::vector<int>{2, 1, 0});

  const Graph k2 = build_complete(2);
  CHECK(apply_move(k2, cfg({2, 0}), {0, 1}).counts() == std::vector<int>{0, 1});
  CHECK_THROWS_AS(apply_move(k2, cfg({1, 0}), {0, 1}), Error);
  CHECK_THROWS_AS(apply_move(p3, cfg({4, 0, 0}), {0, 2}), Error);  // non-edge

  // size decreases by exactly one per move
  const Configuration before = cfg({3, 2, 1});
  const Configuration after = apply_move(p3, before, {1, 2});
  CHECK(after.size() == before.size() - 1);
}

TEST_CASE("configuration size is recomputed") {
  Configuration c(3);
  c[0] = 2;
  c[2] = 5;
  CHECK(c.size() == 7);
  CHECK_THROWS_AS(Configuration({1, -1}), Error);
}

TEST_CASE("is_t_solvable spec instances") {
  const Graph p3 = build_path(3);
  const SolveVerdict relay = is_t_solvable(p3, cfg({4, 0, 0}), 2, 1);
  check_target_witness(p3, cfg({4, 0, 0}), 2, 1, relay);

  // friendship(2): hub and target empty, 3 pebbles on the opposite triangle,
  // 1 on the remaining leaves -- unsolvable at size 5
  const Graph f2 = build_friendship(2);
  const Configuration fw = cfg({0, 0, 1, 3, 1});
  CHECK(is_t_solvable(f2, fw, 1, 1).outcome == Outcome::Unsolvable);
  CHECK(oracle::t_solvable(f2, fw, 1, 1) == false);

  // K_4, two-fold target: 3+1+1 on the non-targets delivers only one pebble
  const Graph k4 = build_complete(4);
  const Configuration kw = cfg({3, 1, 1, 0});
  CHECK(is_t_solvable(k4, kw, 3, 2).outcome == Outcome::Unsolvable);
  CHECK(oracle::t_solvable(k4, kw, 3, 2) == false);
  CHECK(oracle::max_deliverable(k4, kw, 3) == 1);

  CHECK_THROWS_AS(is_t_solvable(build_edgeless(2), cfg({1, 1}), 0, 1), Error);
  CHECK_THROWS_AS(is_t_solvable(k4, cfg({1, 1, 1, 1}), 0, 0), Error);
}

TEST_CASE("max_deliverable") {
  const Graph p3 = build_path(3);
  CHECK(max_deliverable(p3, cfg({4, 0, 0}), 2).value == 1);

  const Graph k3 = build_complete(3);
  CHECK(max_deliverable(k3, cfg({3, 1, 0}), 2).value == 1);
  CHECK(oracle::max_deliverable(k3, cfg({3, 1, 0}), 2) == 1);

  CHECK(max_deliverable(k3, cfg({0, 0, 0}), 2).value == 0);
  CHECK(max_deliverable(p3, cfg({8, 0, 0}), 2).value == 2);
}

TEST_CASE("cover solvability spec instances") {
  const Graph k2 = build_complete(2);
  const SolveVerdict v = is_cover_solvable(k2, cfg({3, 0}));
  REQUIRE(v.outcome == Outcome::Solvable);
  CHECK(covers_all(replay_moves(k2, cfg({3, 0}), v.witness)));

  const Graph p3 = build_path(3);
  CHECK(is_cover_solvable(p3, cfg({7, 0, 0})).outcome == Outcome::Solvable);
  CHECK(is_cover_solvable(p3, cfg({6, 0, 0})).outcome == Outcome::Unsolvable);
  CHECK(oracle::cover_solvable(p3, cfg({6, 0, 0})) == false);

  // already-covered fast path
  const SolveVerdict covered = is_cover_solvable(p3, cfg({1, 1, 1}));
  CHECK(covered.outcome == Outcome::Solvable);
  CHECK(covered.witness.empty());
}

TEST_CASE("threshold fast path emits a replayable relay") {
  const Graph p4 = build_path(4);
  for (long long t : {1LL, 2LL, 3LL}) {
    std::vector<int> counts(4, 0);
    counts[0] = static_cast<int>(t) << 3;  // t * 2^{d(0,3)}
    const Configuration c = cfg(counts);
    const SolveVerdict v = is_t_solvable(p4, c, 3, t);
    check_target_witness(p4, c, 3, t, v);
  }
}

TEST_CASE("resource limit is a distinct outcome") {
  const Graph c6 = build_cycle(6);
  Budget tiny;
  tiny.max_states = 1;
  const SolveVerdict v = is_t_solvable(c6, cfg({0, 3, 1, 1, 1, 3}), 0, 2, tiny);
  CHECK(v.outcome == Outcome::Limit);
}

TEST_CASE("oracle agreement on small connected graphs") {
  // unit-sized slice; the acceptance suite runs the full n <= 4 sweep
  std::mt19937 rng(7);
  for (int n = 2; n <= 3; ++n) {
    for (const Graph& g : oracle::all_connected_graphs(n)) {
      for (int size = 0; size <= 6; ++size) {
        for (const auto& counts : oracle::configurations_of_size(n, size)) {
          const Configuration c = cfg(counts);
          for (VertexId r = 0; r < n; ++r)
            for (long long t : {1LL, 2LL}) {
              const SolveVerdict v = is_t_solvable(g, c, r, t);
              REQUIRE(v.outcome != Outcome::Limit);
              CHECK((v.outcome == Outcome::Solvable) ==
                    oracle::t_solvable(g, c, r, t));
              if (v.outcome == Outcome::Solvable)
                check_target_witness(g, c, r, t, v);
            }
          const SolveVerdict cv = is_cover_solvable(g, c);
          CHECK((cv.outcome == Outcome::Solvable) ==
                oracle::cover_solvable(g, c));
        }
      }
    }
  }
}

TEST_CASE("monotonicity under pebble addition") {
  std::mt19937 rng(20240811);
  const Graph graphs[] = {build_path(4), build_cycle(5), build_star(3),
                          build_friendship(2)};
  for (int trial = 0; trial < 120; ++trial) {
    const Graph& g = graphs[trial % 4];
    std::vector<int> counts(g.order(), 0);
    for (int i = 0; i < 6; ++i) ++counts[rng() % g.order()];
    const VertexId r = rng() % g.order();
    const long long t = 1 + rng() % 2;
    const Configuration c = cfg(counts);
    if (is_t_solvable(g, c, r, t).outcome != Outcome::Solvable) continue;
    std::vector<int> bigger = counts;
    ++bigger[rng() % g.order()];
    CHECK(is_t_solvable(g, cfg(bigger), r, t).outcome == Outcome::Solvable);
  }
}

TEST_CASE("automorphism equivariance") {
  std::mt19937 rng(99);

  const Graph c5 = build_cycle(5);
  std::vector<int> rot(5), refl(5);
  for (int i = 0; i < 5; ++i) rot[i] = (i + 1) % 5;
  for (int i = 0; i < 5; ++i) refl[i] = (5 - i) % 5;

  const Graph k4 = build_complete(4);
  std::vector<int> swap01 = {1, 0, 2, 3};

  const Graph q3 = build_hypercube(3);
  std::vector<int> xor_mask(8), bit_swap(8);
  for (int v = 0; v < 8; ++v) xor_mask[v] = v ^ 5;
  for (int v = 0; v < 8; ++v)
    bit_swap[v] = (v & 4) | ((v & 1) << 1) | ((v >> 1) & 1);

  struct Case {
    const Graph* g;
    const std::vector<int>* sigma;
  };
  const Case cases[] = {{&c5, &rot}, {&c5, &refl}, {&k4, &swap01},
                        {&q3, &xor_mask}, {&q3, &bit_swap}};

  for (const auto& [gp, sp] : cases) {
    const Graph& g = *gp;
    const std::vector<int>& sigma = *sp;
    for (auto [u, v] : g.edges()) REQUIRE(g.adjacent(sigma[u], sigma[v]));
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<int> counts(g.order(), 0);
      for (int i = 0; i < 5; ++i) ++counts[rng() % g.order()];
      const VertexId r = rng() % g.order();
      const long long t = 1 + rng() % 2;
      const Configuration c = cfg(counts);
      const Outcome a = is_t_solvable(g, c, r, t).outcome;
      const Outcome b = is_t_solvable(g, permute(c, sigma), sigma[r], t).outcome;
      CHECK(a == b);
    }
  }
}

TEST_CASE("solve context reuse matches fresh solves") {
  const Graph c4 = build_cycle(4);
  SolveContext ctx = SolveContext::for_target(c4, 0, 1);
  for (int size = 0; size <= 5; ++size)
    for (const auto& counts : oracle::configurations_of_size(4, size)) {
      const Configuration c = cfg(counts);
      CHECK((ctx.solve(c).outcome == Outcome::Solvable) ==
            (is_t_solvable(c4, c, 0, 1).outcome == Outcome::Solvable));
    }
}
