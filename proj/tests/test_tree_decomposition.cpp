#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpm/generators.hpp"
#include "dpm/tree_decomposition.hpp"

using namespace dpm;

namespace {

std::set<VertexId> all_of(const Graph& g) {
  auto vs = g.vertices();
  return {vs.begin(), vs.end()};
}

std::size_t weight(const std::set<VertexId>& side, const std::set<VertexId>& U) {
  std::size_t w = 0;
  for (VertexId v : side) w += U.count(v);
  return w;
}

void check_split(const Graph& h, const TreeDecomposition& td, const std::set<VertexId>& U) {
  auto t = balanced_separator(h, td, U);
  for (VertexId v : t.a1)
    for (VertexId w : h.neighbors(v)) CHECK_FALSE(t.a2.count(w));
  CHECK(t.s.size() <= static_cast<std::size_t>(td.width() + 1));
  CHECK(3 * weight(t.a1, U) <= 2 * U.size());
  CHECK(3 * weight(t.a2, U) <= 2 * U.size());
  std::set<VertexId> all = t.a1;
  all.insert(t.s.begin(), t.s.end());
  all.insert(t.a2.begin(), t.a2.end());
  CHECK(all == all_of(h));
  CHECK(t.a1.size() + t.s.size() + t.a2.size() == h.vertex_count());
}

}  // namespace

TEST_CASE("path on nine vertices") {
  Instance p = gen_path(8);
  auto td = heuristic_tree_decomposition(p.graph);
  CHECK(td.width() == 1);
  CHECK(td.bags.size() == 8);
  std::set<std::vector<VertexId>> bags(td.bags.begin(), td.bags.end());
  for (VertexId i = 1; i <= 8; ++i) CHECK(bags.count({i, i + 1}));
  CHECK(validate_td(p.graph, td).ok);

  auto t = balanced_separator(p.graph, td, all_of(p.graph));
  bool centre = t.s == std::set<VertexId>{4, 5} || t.s == std::set<VertexId>{5, 6};
  CHECK(centre);
  CHECK(weight(t.a1, all_of(p.graph)) <= 6);
  CHECK(weight(t.a2, all_of(p.graph)) <= 6);
}

TEST_CASE("trees have width one") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Instance t = gen_random_tree(40, 4, seed);
    auto td = heuristic_tree_decomposition(t.graph);
    CHECK(td.width() == 1);
    CHECK(validate_td(t.graph, td).ok);
  }
}

TEST_CASE("4x4 grid width at most 4") {
  Instance g = gen_grid_lb(4);
  auto td = heuristic_tree_decomposition(g.graph);
  CHECK(td.width() <= 4);
  CHECK(validate_td(g.graph, td).ok);
}

TEST_CASE("validate_td reports violations") {
  Instance p = gen_path(3);  // 1-2-3-4
  TreeDecomposition good{{{1, 2}, {2, 3}, {3, 4}}, {{0, 1}, {1, 2}}};
  CHECK(validate_td(p.graph, good).ok);

  TreeDecomposition missing_edge{{{1, 2}, {3}, {3, 4}}, {{0, 1}, {1, 2}}};
  auto v = validate_td(p.graph, missing_edge);
  CHECK_FALSE(v.ok);
  REQUIRE(v.edge);
  CHECK(*v.edge == std::pair<VertexId, VertexId>{2, 3});

  TreeDecomposition broken{{{1, 2, 3}, {3, 4}, {2}}, {{0, 1}, {1, 2}}};
  auto w = validate_td(p.graph, broken);
  CHECK_FALSE(w.ok);
  REQUIRE(w.vertex);
  CHECK(*w.vertex == 2);

  TreeDecomposition cycle{{{1, 2}, {2, 3}, {3, 4}}, {{0, 1}, {1, 2}, {2, 0}}};
  CHECK_FALSE(validate_td(p.graph, cycle).ok);
  TreeDecomposition uncovered{{{1, 2}, {2, 3}}, {{0, 1}}};
  CHECK_FALSE(validate_td(p.graph, uncovered).ok);
  TreeDecomposition stranger{{{1, 2}, {2, 3}, {3, 4, 9}}, {{0, 1}, {1, 2}}};
  CHECK_FALSE(validate_td(p.graph, stranger).ok);
}

TEST_CASE("separator corner cases") {
  Instance p = gen_path(8);
  auto td = heuristic_tree_decomposition(p.graph);
  SUBCASE("single weighted vertex") {
    auto t = balanced_separator(p.graph, td, {7});
    CHECK(t.s.count(7));
  }
  SUBCASE("no weight") {
    auto t = balanced_separator(p.graph, td, {});
    CHECK_FALSE(t.s.empty());
  }
  SUBCASE("disconnected graph") {
    Graph g = build_graph(6, {}, {{1, 2, Length::exact(1)}, {3, 4, Length::exact(1)}, {5, 6, Length::exact(1)}});
    auto tdg = heuristic_tree_decomposition(g);
    CHECK(validate_td(g, tdg).ok);
    check_split(g, tdg, all_of(g));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(balanced_separator(Graph(), TreeDecomposition{}, {}), GraphError);
    CHECK_THROWS_AS(balanced_separator(p.graph, td, {42}), GraphError);
  }
}

TEST_CASE("balance and separation on random bounded-width graphs") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const int width = 1 + static_cast<int>(seed % 3);
    auto in = gen_random_partial_ktree(60, width, 20, 60, seed);
    CHECK(validate_td(in.graph, in.td).ok);
    CHECK(in.td.width() <= width);
    check_split(in.graph, in.td, in.terminals);
    check_split(in.graph, in.td, all_of(in.graph));
    auto h = heuristic_tree_decomposition(in.graph);
    CHECK(validate_td(in.graph, h).ok);
    check_split(in.graph, h, in.terminals);
  }
}

TEST_CASE("restricting a decomposition keeps it valid") {
  auto in = gen_random_partial_ktree(40, 2, 10, 70, 3);
  std::set<VertexId> keep;
  for (VertexId v = 1; v <= 40; v += 2) keep.insert(v);
  Graph h = in.graph.induced_subgraph(keep);
  auto td = restrict_td(in.td, keep);
  CHECK(validate_td(h, td).ok);
  CHECK(td.width() <= in.td.width());
}
