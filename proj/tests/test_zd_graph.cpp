#include "doctest.h"
#include "zdsg/errors.hpp"
#include "zdsg/zd_graph.hpp"

using namespace zdsg;

namespace {

SimpleGraph path3() {
  SimpleGraph g(3);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  return g;
}

}  // namespace

TEST_CASE("edges are sorted and deduplicated") {
  SimpleGraph g(3);
  g.add_edge(3, 1);
  g.add_edge(1, 3);
  g.add_edge(2, 1);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}});
  CHECK(g.degree(1) == 2);
  CHECK(g.adjacent(3, 1));
  CHECK_FALSE(g.adjacent(2, 3));
  CHECK_THROWS_AS(g.add_edge(2, 2), UsageError);
  CHECK_THROWS_AS(g.add_edge(0, 2), UsageError);
  CHECK_THROWS_AS(g.add_edge(1, 4), UsageError);
}

TEST_CASE("zero-divisor graph ignores loops") {
  MulTable t(3);
  t.set(1, 1, 1);
  t.set(2, 3, 2);
  const SimpleGraph g = build_zd_graph(t);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}});
}

TEST_CASE("complete graphs are recognized first") {
  SimpleGraph k1(1);
  CHECK(recognize_target(k1)->target == TargetGraph::complete(1));

  SimpleGraph k2(2);
  k2.add_edge(1, 2);
  const auto r = recognize_target(k2);
  REQUIRE(r);
  CHECK(r->target == TargetGraph::complete(2));
  CHECK_FALSE(r->pendant.has_value());
}

TEST_CASE("P3 is K2 plus an end vertex with the larger end as pendant") {
  const auto r = recognize_target(path3());
  REQUIRE(r);
  CHECK(r->target == TargetGraph::complete_plus_end(2));
  CHECK(r->pendant == 3);
  CHECK(r->neighbor == 2);
}

TEST_CASE("K3+1 in a shuffled labeling") {
  // Clique {2, 3, 4}, pendant 1 on vertex 3.
  SimpleGraph g(4);
  g.add_edge(2, 3);
  g.add_edge(2, 4);
  g.add_edge(3, 4);
  g.add_edge(1, 3);
  const auto r = recognize_target(g);
  REQUIRE(r);
  CHECK(r->target == TargetGraph::complete_plus_end(3));
  CHECK(r->pendant == 1);
  CHECK(r->neighbor == 3);
  CHECK(vertex_labels(g) == std::vector<std::string>{"", "x1", "a2", "a1", "a3"});
}

TEST_CASE("other graphs are not targets") {
  SimpleGraph empty(2);
  CHECK_FALSE(recognize_target(empty));

  SimpleGraph p4(4);
  p4.add_edge(1, 2);
  p4.add_edge(2, 3);
  p4.add_edge(3, 4);
  CHECK_FALSE(recognize_target(p4));
  CHECK(vertex_labels(p4) == std::vector<std::string>{"", "v1", "v2", "v3", "v4"});

  // K_4 minus an edge has no degree-1 vertex.
  SimpleGraph kite(4);
  kite.add_edge(1, 2);
  kite.add_edge(1, 3);
  kite.add_edge(2, 3);
  kite.add_edge(2, 4);
  kite.add_edge(3, 4);
  CHECK_FALSE(recognize_target(kite));
}

TEST_CASE("target graph names") {
  CHECK(TargetGraph::complete(4).name() == "K4");
  CHECK(TargetGraph::complete_plus_end(3).name() == "K3+1");
  CHECK(TargetGraph::complete_plus_end(3).kind() == "kn1");
  CHECK(TargetGraph::complete_plus_end(3).vertex_count() == 4);
  CHECK_THROWS_AS(TargetGraph::complete(0), UsageError);
  CHECK_THROWS_AS(TargetGraph::complete_plus_end(1), UsageError);
}

TEST_CASE("dot output") {
  const SimpleGraph g = path3();
  const std::vector<std::string> notes{"three vertices"};
  const std::string dot = to_dot(g, vertex_labels(g), notes);
  CHECK(dot ==
        "graph K2_1 {\n"
        "  // three vertices\n"
        "  a2;\n"
        "  a1;\n"
        "  x1;\n"
        "  a2 -- a1;\n"
        "  a1 -- x1;\n"
        "}\n");
}
