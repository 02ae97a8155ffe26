#pragma once

#include <string>
#include <string_view>

#include "pebble/graph.hpp"

namespace pebble {

// Vertex numbering is fixed per family so that witness configurations are
// reproducible byte for byte:
//   path(k)        0-1-...-(k-1)
//   cycle(k)       0-1-...-(k-1)-0, k >= 3
//   complete(k)    all pairs on 0..k-1
//   star(k)        hub 0, leaves 1..k
//   edgeless(k)    k isolated vertices (product operand only for k >= 2)
//   hypercube(d)   vertices are the integers 0..2^d-1, edge iff one bit differs
//   friendship(n)  hub 0; triangle i has leaves 2i+1, 2i+2
//   book(n)        hub edge u=0, v=1; page i has 2i adjacent to u and 2i+1
//                  adjacent to v, with 2i adjacent to 2i+1 (in book(2) the
//                  spanning 6-cycle is 0-2-3-1-5-4-0)
// Products keep the first operand's vertices 0..g-1; copy i of H occupies
// g+i*h .. g+(i+1)*h-1.

Graph build_path(int k);
Graph build_cycle(int k);
Graph build_complete(int k);
Graph build_star(int k);
Graph build_edgeless(int k);
Graph build_hypercube(int d);
Graph build_friendship(int n);
Graph build_book(int n);

/// Dispatch by case-insensitive family name; throws Error for unknown names
/// or out-of-range parameters.
Graph build_family(std::string_view name, int k);

/// Cartesian product; both operands must be connected.
/// Vertex (a, x) maps to a*|V(H)| + x.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Corona: one copy of g, |V(g)| copies of h, vertex i of g joined to every
/// vertex of copy i. g must be connected; h may be edgeless.
Graph corona(const Graph& g, const Graph& h);

/// Neighbourhood corona: copy i is joined to the neighbours of vertex i
/// instead of vertex i itself. g must be connected with at least 2 vertices
/// (for g = K_1 the copies would attach to nothing).
Graph neighbourhood_corona(const Graph& g, const Graph& h);

}  // namespace pebble
