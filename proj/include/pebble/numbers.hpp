#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pebble/configuration.hpp"
#include "pebble/graph.hpp"
#include "pebble/solve.hpp"

namespace pebble {

enum class QuantityKind { PiT, Gamma, PiStar, ClassLabel };

struct ComputeOptions {
  Budget budget{};
  int workers = 0;       // 0 = hardware concurrency
  bool symmetry = true;  // orbit reduction of targets (applies for n <= 10)
};

/// An exact pebbling quantity with its extremal witness. For PiT/Gamma the
/// witness is the lexicographically smallest maximum-size unsolvable
/// configuration (size value-1); for PiStar it is the first size-value
/// configuration (descending lexicographic order) solvable for every target.
struct QuantityResult {
  QuantityKind kind = QuantityKind::PiT;
  int t = 1;
  RunStatus status = RunStatus::Complete;
  long long value = -1;
  Configuration witness;
  bool has_witness = false;
  std::vector<long long> rooted_values;  // PiT only: value per target vertex
  VertexId extremal_target = -1;         // PiT only
  std::string label;                     // ClassLabel only
  bool diam2_theorem_applies = false;    // ClassLabel only
  std::uint64_t states = 0;              // total states + enumeration nodes
};

struct RootedResult {
  RunStatus status = RunStatus::Complete;
  long long value = -1;
  Configuration witness;
  std::uint64_t states = 0;
};

/// pi_t(G, r) = 1 + max size of a configuration that is not t-fold r-solvable.
///
/// Every unsolvable configuration lies in the box count[r] <= t-1,
/// count[v] <= t*2^{d(v,r)}-1 (anything above solves via the relay fast path),
/// so the search adds pebbles depth-first inside that box, never descending
/// below a configuration already proven solvable (solvability is monotone
/// under pebble addition). The reported witness is re-verified unsolvable
/// through a fresh solve context.
RootedResult rooted_pebbling_number(const Graph& g, VertexId r, long long t = 1,
                                    Budget budget = {});

/// pi_t(G) = max over targets of pi_t(G, r); rooted values for every vertex.
/// Distinct orbit representatives are solved concurrently; results are
/// identical for any worker count.
QuantityResult pebbling_number(const Graph& g, long long t = 1,
                               const ComputeOptions& opts = {});

/// gamma(G) by exhaustive search: 1 + max size of a non-cover-solvable
/// configuration, searched inside the box count[v] <= s_v - 1 where
/// s_v = sum_u 2^{d(u,v)}. Intended for small graphs; the stacking formula is
/// the production path.
QuantityResult cover_pebbling_search(const Graph& g,
                                     const ComputeOptions& opts = {});

/// Stack cost of covering from v: s_v = sum_u 2^{d(u,v)}.
long long stacking_value(const Graph& g, VertexId v);

/// gamma(G) via the stacking formula: max_v s_v.
long long cover_pebbling_stacking(const Graph& g);

/// Smallest-index vertex attaining the stacking maximum.
VertexId stacking_best_vertex(const Graph& g);

/// pi*(G): least m such that some size-m configuration is 1-fold solvable for
/// every target; m increases from 1, configurations of each size enumerated in
/// descending lexicographic order, each tested against every target.
QuantityResult optimal_pebbling_number(const Graph& g,
                                       const ComputeOptions& opts = {});

/// Computes pi(G) and labels the graph Class 0 (pi = n), Class 1 (pi = n+1)
/// or "pi - n = k"; also reports whether the diameter-two bound pi <= n+1 is
/// applicable.
QuantityResult classify(const Graph& g, const ComputeOptions& opts = {});

}  // namespace pebble
