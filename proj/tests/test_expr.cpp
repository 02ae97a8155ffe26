#include <doctest.h>

#include <random>

#include "pebble/canonical.hpp"
#include "pebble/expr.hpp"
#include "pebble/families.hpp"
#include "pebble/io.hpp"

using namespace pebble;

namespace {

GraphExpr random_expr(std::mt19937& rng, int depth) {
  GraphExpr e;
  const bool leaf = depth <= 0 || rng() % 3 != 0;
  if (leaf) {
    const char* families[] = {"path",      "cycle",     "complete",
                              "star",      "edgeless",  "hypercube",
                              "friendship", "book"};
    e.head = families[rng() % 8];
    long long k = 1 + rng() % 5;
    if (e.head == "cycle") k += 2;
    e.int_args.push_back(k);
  } else {
    const char* ops[] = {"cartesian", "corona", "ncorona"};
    e.head = ops[rng() % 3];
    e.children.push_back(random_expr(rng, depth - 1));
    e.children.push_back(random_expr(rng, depth - 1));
  }
  return e;
}

std::size_t offset_of(const char* text) {
  try {
    parse_graph_expr(text);
  } catch (const ParseError& err) {
    return err.offset();
  }
  FAIL("expected ParseError for ", text);
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("parse well-formed expressions") {
  const GraphExpr e = parse_graph_expr("corona(complete(3),path(1))");
  CHECK(e.head == "corona");
  REQUIRE(e.children.size() == 2);
  CHECK(e.children[0].head == "complete");
  CHECK(e.children[0].int_args == std::vector<long long>{3});
  CHECK(e.children[1].head == "path");

  const GraphExpr star = parse_graph_expr("ncorona(complete(3),complete(2))");
  CHECK(star.head == "ncorona");
  CHECK(evaluate(star).order() == 9);

  // case-insensitive, whitespace-insensitive
  const GraphExpr spaced = parse_graph_expr("  Corona ( COMPLETE(3) , path(1) ) ");
  CHECK(spaced == e);
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK(offset_of("cycle()") == 6);
  CHECK(offset_of("wedge(3)") == 0);
  CHECK(offset_of("corona(path(2))") == 14);       // missing second argument
  CHECK(offset_of("path(1,2)") == 6);              // extra integer
  CHECK(offset_of("path(2)x") == 7);               // trailing input
  CHECK(offset_of("path(x)") == 5);                // not an integer
  CHECK(offset_of("corona(path(2),path(2),path(2))") == 22);
  CHECK(offset_of("path") == 4);                   // missing '('
  CHECK(offset_of("") == 0);

  // range errors are reported at the offending node's offset
  CHECK(offset_of("cycle(2)") == 0);
  CHECK(offset_of("corona(path(2),cycle(2))") == 15);
  CHECK(offset_of("ncorona(complete(1),path(2))") == 0);
}

TEST_CASE("pretty-print round trip") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 200; ++trial) {
    const GraphExpr e = random_expr(rng, 2);
    const GraphExpr back = parse_graph_expr(to_string(e));
    CHECK(back == e);
  }
}

TEST_CASE("evaluation matches direct construction") {
  CHECK(isomorphic(graph_from_expr_text("book(2)"),
                   cartesian_product(build_star(2), build_path(2))));
  CHECK(graph_from_expr_text("corona(complete(3),complete(2))").order() == 9);
  CHECK(graph_from_expr_text("hypercube(3)").edge_count() == 12);
  CHECK_THROWS_AS(graph_from_expr_text("path(0)"), ParseError);
}

TEST_CASE("dot export has |V| node lines and |E| edge lines") {
  const Graph g = build_friendship(2);
  const std::string dot = to_dot(g);
  int nodes = 0, edges = 0;
  std::size_t start = 0;
  while (start < dot.size()) {
    std::size_t end = dot.find('\n', start);
    if (end == std::string::npos) end = dot.size();
    const std::string line = dot.substr(start, end - start);
    if (line.find("--") != std::string::npos) ++edges;
    else if (line.size() > 2 && line.back() == ';') ++nodes;
    start = end + 1;
  }
  CHECK(nodes == g.order());
  CHECK(edges == g.edge_count());
}

TEST_CASE("edge-list JSON round trip") {
  const Graph g = corona(build_complete(3), build_complete(1));
  const Graph back = graph_from_edge_list_json(to_edge_list_json(g));
  CHECK(back.order() == g.order());
  CHECK(back.edges() == g.edges());
  CHECK(back.family() == g.family());

  CHECK_THROWS_AS(graph_from_edge_list_json("{"), Error);
  CHECK_THROWS_AS(graph_from_edge_list_json("{\"order\":2}"), Error);
  CHECK_THROWS_AS(graph_from_edge_list_json(
                      "{\"order\":2,\"edges\":[[0,0]]}"),
                  Error);
}
