#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpm/generators.hpp"
#include "dpm/graph.hpp"

using namespace dpm;

namespace {

Graph path3() { return build_graph(3, {}, {{1, 2, Length::exact(1)}, {2, 3, Length::exact(1)}}); }

Graph triangle(std::vector<VertexId> terms = {}) {
  return build_graph(3, terms, {{1, 2, Length::exact(1)}, {2, 3, Length::exact(1)}, {1, 3, Length::exact(1)}});
}

}  // namespace

TEST_CASE("build_graph basics") {
  Graph g = build_graph(2, {1, 2}, {{1, 2, Length::exact(5)}});
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.terminals() == std::vector<VertexId>{1, 2});
  CHECK(g.edge(1, 2)->length == Length::exact(5));
  CHECK(g.edge(2, 1)->index == 1);
}

TEST_CASE("parallel edges collapse to the shorter one") {
  Graph g = build_graph(3, {}, {{1, 2, Length::exact(3)}, {1, 2, Length::exact(7)}});
  CHECK(g.edge_count() == 1);
  CHECK(g.edge(1, 2)->length == Length::exact(3));
  CHECK(g.edge(1, 2)->index == 1);
  CHECK(g.vertex_count() == 3);

  Graph h = build_graph(2, {}, {{1, 2, Length::exact(7)}, {2, 1, Length::exact(3)}});
  CHECK(h.edge(1, 2)->length == Length::exact(3));
  CHECK(h.edge(1, 2)->index == 1);
}

TEST_CASE("build_graph rejects bad input") {
  CHECK_THROWS_AS(build_graph(2, {}, {{1, 1, Length::exact(1)}}), GraphError);
  CHECK_THROWS_AS(build_graph(2, {}, {{1, 3, Length::exact(1)}}), GraphError);
  CHECK_THROWS_AS(build_graph(2, {4}, {}), GraphError);
  CHECK_THROWS_AS(build_graph(2, {}, {{1, 2, Length::approximate(1.0)}}), GraphError);
}

TEST_CASE("contract a path edge") {
  // Contracting (1,2) into 1 re-attaches (2,3) as (1,3), carrying both lengths.
  Graph g = apply_minor_op(path3(), MinorOp::contract_edge(1, 2, 1));
  CHECK(g.vertices() == std::vector<VertexId>{1, 3});
  REQUIRE(g.has_edge(1, 3));
  CHECK(g.edge(1, 3)->length == Length::exact(2));
  CHECK(g.edge(1, 3)->index == 2);
}

TEST_CASE("contract inside a triangle drops the loop and keeps the shorter parallel edge") {
  Graph g = apply_minor_op(triangle(), MinorOp::contract_edge(1, 2, 1));
  CHECK(g.vertices() == std::vector<VertexId>{1, 3});
  CHECK(g.edge_count() == 1);
  CHECK(g.edge(1, 3)->length == Length::exact(1));
  CHECK(g.edge(1, 3)->index == 2);
}

TEST_CASE("terminals are protected") {
  Graph g = triangle({1, 2});
  CHECK_THROWS_AS(apply_minor_op(g, MinorOp::contract_edge(1, 2, 1)), GraphError);
  CHECK_THROWS_AS(apply_minor_op(g, MinorOp::delete_vertex(1)), GraphError);
  CHECK_THROWS_AS(apply_minor_op(g, MinorOp::contract_edge(1, 3, 3)), GraphError);
  Graph h = apply_minor_op(g, MinorOp::contract_edge(1, 3, 1));
  CHECK(h.is_terminal(1));
  CHECK(h.vertex_count() == 2);
}

TEST_CASE("ops on missing things fail and leave the graph alone") {
  Graph g = path3();
  Graph before = g;
  CHECK_THROWS_AS(g.apply(MinorOp::delete_vertex(9)), GraphError);
  CHECK_THROWS_AS(g.apply(MinorOp::delete_edge(1, 3)), GraphError);
  CHECK_THROWS_AS(g.apply(MinorOp::contract_edge(1, 3, 1)), GraphError);
  CHECK_THROWS_AS(g.apply(MinorOp::contract_edge(1, 2, 3)), GraphError);
  CHECK(g == before);
}

TEST_CASE("delete vertex and edge") {
  Graph g = apply_minor_op(triangle(), MinorOp::delete_vertex(2));
  CHECK(g.vertices() == std::vector<VertexId>{1, 3});
  CHECK(g.edge_count() == 1);
  Graph h = apply_minor_op(triangle(), MinorOp::delete_edge(3, 1));
  CHECK(h.edge_count() == 2);
  CHECK_FALSE(h.has_edge(1, 3));
}

TEST_CASE("replay") {
  Instance p = gen_path(5);
  SUBCASE("empty witness is the identity") {
    CHECK(replay_witness(p.graph, Witness{p.graph.fingerprint(), {}}) == p.graph);
  }
  SUBCASE("contracting the four internal vertices leaves one edge of length 5") {
    Witness w{p.graph.fingerprint(), {}};
    for (VertexId v = 2; v <= 5; ++v) w.ops.push_back(MinorOp::contract_edge(1, v, 1));
    Graph g = replay_witness(p.graph, w);
    CHECK(g.vertices() == std::vector<VertexId>{1, 6});
    CHECK(g.edge(1, 6)->length == Length::exact(5));
  }
  SUBCASE("stale fingerprint") {
    CHECK_THROWS_AS(replay_witness(p.graph, Witness{p.graph.fingerprint() ^ 1, {}}), GraphError);
  }
  SUBCASE("failing op is named") {
    Witness w{p.graph.fingerprint(), {MinorOp::delete_vertex(3), MinorOp::delete_vertex(3)}};
    try {
      replay_witness(p.graph, w);
      FAIL("expected a replay error");
    } catch (const ReplayError& e) {
      CHECK(e.op_index() == 1);
    }
  }
  SUBCASE("deterministic") {
    Witness w{p.graph.fingerprint(), {MinorOp::contract_edge(2, 3, 2), MinorOp::delete_edge(1, 2)}};
    Graph a = replay_witness(p.graph, w), b = replay_witness(p.graph, w);
    CHECK(a == b);
    CHECK(a.edges() == b.edges());
  }
}

TEST_CASE("union") {
  Graph a = build_graph(2, {}, {{1, 2, Length::exact(3)}});
  Graph b = build_graph(2, {}, {{1, 2, Length::exact(5)}});
  CHECK(union_graphs(a, a) == a);
  CHECK(union_graphs(a, b).edge(1, 2)->length == Length::exact(3));
  CHECK(union_graphs(a, b) == union_graphs(b, a));

  Graph c(LengthMode::exact);
  c.add_vertex(7);
  c.add_vertex(8);
  c.add_edge(7, 8, Length::exact(2), 1);
  Graph u = union_graphs(a, c);
  CHECK(u.vertex_count() == 4);
  CHECK(u.edge_count() == 2);
  CHECK(union_graphs(union_graphs(a, b), c) == union_graphs(a, union_graphs(b, c)));

  Graph t = build_graph(2, {1}, {});
  CHECK_THROWS_AS(union_graphs(a, t), GraphError);
  Graph f(LengthMode::approximate);
  CHECK_THROWS_AS(union_graphs(a, f), GraphError);
}

TEST_CASE("fingerprint tracks content") {
  Graph a = path3(), b = path3();
  CHECK(a.fingerprint() == b.fingerprint());
  b.set_terminal(1, true);
  CHECK(a.fingerprint() != b.fingerprint());
  Graph c = build_graph(3, {}, {{1, 2, Length::exact(1)}, {2, 3, Length::exact(2)}});
  CHECK(a.fingerprint() != c.fingerprint());
}

TEST_CASE("op text") {
  CHECK(MinorOp::delete_vertex(4).str() == "dv 4");
  CHECK(MinorOp::delete_edge(1, 2).str() == "de 1 2");
  CHECK(MinorOp::contract_edge(1, 2, 2).str() == "ce 1 2 2");
}
