#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpm/generators.hpp"
#include "dpm/shortest_paths.hpp"
#include "dpm/tw_reduce.hpp"
#include "dpm/verify.hpp"

using namespace dpm;

namespace {

void check_lemmas(const RecursionStats& st) {
  const auto q = static_cast<std::size_t>(st.q);
  REQUIRE_FALSE(st.nodes.empty());
  for (const RecursionNode& n : st.nodes) {
    CHECK(n.boundary < 6 * q);
    CHECK(n.disjoint);
    if (n.terminals < q) CHECK(n.leaf);
    if (!n.leaf) {
      std::size_t big = 0;
      for (int c : n.children) big += st.nodes[static_cast<std::size_t>(c)].terminals >= q;
      CHECK(big >= 2);
      for (const SplitRecord& s : n.splits) {
        CHECK(s.no_cross_edges);
        CHECK(s.separator <= q);
        CHECK(3 * s.side1_weight <= 2 * s.weight_set);
        CHECK(3 * s.side2_weight <= 2 * s.weight_set);
      }
    }
  }
}

void check_output(const Graph& g, const TerminalSet& R, const TwReduction& t) {
  CHECK(verify_distance_preserving(g, t.result.reduced, R).passed());
  CHECK(verify_witness_replay(g, t.result.witness, t.result.reduced).ok);
  CHECK(verify_domination(g, t.result.reduced, t.result.retained).ok);
}

std::size_t max_depth(const RecursionStats& st) {
  int d = 0;
  for (const auto& n : st.nodes) d = std::max(d, n.depth);
  return static_cast<std::size_t>(d);
}

}  // namespace

TEST_CASE("few terminals: one naive call at the root") {
  Instance in = gen_random_connected(30, 20, 6, 9);
  auto td = heuristic_tree_decomposition(in.graph);
  auto t = reduce_tw(in.graph, in.terminals, td);
  CHECK(t.stats.nodes.size() == 1);
  CHECK(t.stats.nodes[0].leaf);
  CHECK(t.result.reduced == reduce_naive(in.graph, in.terminals).reduced);
  check_output(in.graph, in.terminals, t);
}

TEST_CASE("random tree with 64 leaf terminals recurses") {
  Instance in = gen_random_tree(300, 64, 11);
  auto td = heuristic_tree_decomposition(in.graph);
  REQUIRE(td.width() == 1);
  auto t = reduce_tw(in.graph, in.terminals, td);
  CHECK(t.stats.q == 2);
  CHECK(max_depth(t.stats) >= 1);
  check_lemmas(t.stats);
  check_output(in.graph, in.terminals, t);
  CHECK(t.result.reduced.vertex_count() <= 2 * 64 - 2);
}

TEST_CASE("grid blocks stay separate") {
  auto in = gen_tw_family(4, 24);
  auto t = reduce_tw(in.graph, in.terminals, in.td);
  check_lemmas(t.stats);
  check_output(in.graph, in.terminals, t);
  // No edge may join two blocks of 16 vertices.
  for (const Edge& e : t.result.reduced.edges()) CHECK((e.u - 1) / 16 == (e.v - 1) / 16);
}

TEST_CASE("q override can only raise q") {
  auto in = gen_tw_family(4, 8);
  CHECK(reduce_tw(in.graph, in.terminals, in.td, 2).stats.q == 5);
  auto t = reduce_tw(in.graph, in.terminals, in.td, 8);
  CHECK(t.stats.q == 8);
  check_output(in.graph, in.terminals, t);
}

TEST_CASE("random partial k-trees with many terminals") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const int width = 1 + static_cast<int>(seed % 2);
    auto in = gen_random_partial_ktree(400, width, 120, 70, seed);
    auto t = reduce_tw(in.graph, in.terminals, in.td);
    CHECK(t.stats.nodes.size() > 1);
    check_lemmas(t.stats);
    check_output(in.graph, in.terminals, t);
    CHECK(t.combined.vertex_count() == t.result.reduced.vertex_count());
  }
}

TEST_CASE("bad inputs") {
  Instance in = gen_path(4);
  TreeDecomposition bad{{{1, 2}}, {}};
  CHECK_THROWS_AS(reduce_tw(in.graph, in.terminals, bad), GraphError);
  auto td = heuristic_tree_decomposition(in.graph);
  CHECK_THROWS_AS(reduce_tw(in.graph, {1, 99}, td), GraphError);
  CHECK_THROWS_AS(reduce_tw(in.graph, {1}, td), GraphError);
}

TEST_CASE("empty graph") {
  Graph g;
  auto t = reduce_tw(g, {}, TreeDecomposition{});
  CHECK(t.result.reduced.vertex_count() == 0);
  CHECK(t.stats.nodes.size() == 1);
}
