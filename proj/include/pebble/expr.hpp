#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pebble/error.hpp"
#include "pebble/graph.hpp"

namespace pebble {

/// Graph-expression AST.
///
/// Grammar (whitespace insignificant, identifiers case-insensitive):
///   expr := IDENT "(" args ")"
///   args := expr {"," expr} | INT {"," INT}
/// Family constructors (one integer argument): path, cycle, complete, star,
/// edgeless, hypercube, friendship, book. Binary operators (two expression
/// arguments): cartesian, corona, ncorona.
struct GraphExpr {
  std::string head;                 // lowercased constructor name
  std::vector<GraphExpr> children;  // operator arguments
  std::vector<long long> int_args;  // family arguments
  std::size_t offset = 0;           // byte offset of head in the source text

  bool operator==(const GraphExpr& o) const {
    return head == o.head && children == o.children && int_args == o.int_args;
  }
};

/// Parses the full text as one expression; rejects trailing input.
/// Throws ParseError with a byte offset on unknown constructors, wrong arity,
/// malformed integers, and stray characters.
GraphExpr parse_graph_expr(std::string_view text);

/// Canonical rendering; parse_graph_expr(to_string(e)) == e.
std::string to_string(const GraphExpr& e);

/// Builds the graph; construction errors (parameter out of range,
/// disconnected operand) are rethrown as ParseError carrying the offending
/// node's offset.
Graph evaluate(const GraphExpr& e);

/// parse + evaluate.
Graph graph_from_expr_text(std::string_view text);

}  // namespace pebble
