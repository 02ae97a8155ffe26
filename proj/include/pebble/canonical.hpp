#pragma once

#include <string>
#include <vector>

#include "pebble/graph.hpp"

namespace pebble {

/// Size cap for the brute-force canonical labeling.
inline constexpr int kCanonicalMaxOrder = 10;

/// Canonical labeling key: two graphs (of equal order) receive equal keys iff
/// they are isomorphic. Brute force over color-class-respecting permutations
/// after iterated degree/neighborhood refinement; capped at n <= 10 and throws
/// Error above that rather than silently degrading.
std::string canonical_form(const Graph& g);

/// Colored variant: `colors` distinguishes vertices (e.g. a marked root);
/// isomorphisms must preserve colors.
std::string canonical_form(const Graph& g, const std::vector<int>& colors);

/// Keys equal? Requires both orders <= 10.
bool isomorphic(const Graph& a, const Graph& b);

/// Automorphism orbit of every vertex, named by its smallest member.
/// Exact: u and v share an orbit iff the vertex-rooted canonical keys match.
std::vector<VertexId> vertex_orbits(const Graph& g);

}  // namespace pebble
