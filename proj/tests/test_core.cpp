#include "doctest.h"
#include "helpers.hpp"

using namespace negsets;
using negsets::testing::edges_of;
using negsets::testing::make;

TEST_CASE("skeleton orders edges and rejects non-simple input") {
  auto g = make(4, {{2, 3, '+'}, {1, 0, '-'}, {0, 2, '+'}});
  REQUIRE(g.edge_count() == 3);
  CHECK(g.edge(0) == Edge(0, 1));
  CHECK(g.edge(1) == Edge(0, 2));
  CHECK(g.edge(2) == Edge(2, 3));
  CHECK(g.sign_of(1, 0) == Sign::negative);
  CHECK_FALSE(g.sign_of(1, 3).has_value());

  CHECK_THROWS_AS(make(2, {{0, 0, '+'}}), InvalidGraphError);
  CHECK_THROWS_AS(make(2, {{0, 1, '+'}, {1, 0, '-'}}), InvalidGraphError);
  CHECK_THROWS_AS(make(2, {{0, 2, '+'}}), InvalidGraphError);
}

TEST_CASE("switching flips exactly the cut") {
  auto g = make(4, {{0, 1, '-'}, {1, 2, '+'}, {2, 3, '-'}, {0, 3, '+'}, {0, 2, '+'}});
  VertexSubset x(4, std::vector<Vertex>{0, 2});
  auto h = switch_by(g, x);
  CHECK(h.negative_edges() == (g.negative_edges() ^ cut(g, x)));
  CHECK(switch_by(h, x) == g);
  CHECK(switch_by(g, x.complement()) == h);
  CHECK(cut(g, x).size() == 4);
  CHECK(negate_edges(g, cut(g, x)) == h);
}

TEST_CASE("edge subsets keep their host") {
  auto g = make(3, {{0, 1, '-'}, {1, 2, '+'}, {0, 2, '+'}});
  auto h = make(3, {{0, 1, '-'}, {1, 2, '+'}});
  auto b = edges_of(g, {Edge(0, 1)});
  CHECK_NOTHROW(b.require_host(g, "test"));
  CHECK_THROWS_AS(b.require_host(h, "test"), HostMismatchError);
  CHECK_THROWS_AS(edges_of(g, {Edge(0, 3)}), InvalidGraphError);
  CHECK(to_string(edges_of(g, {Edge(1, 2), Edge(0, 1)})) == "{0-1,1-2}");
}

TEST_CASE("circle sign and canonical form") {
  auto g = make(4, {{0, 1, '-'}, {1, 2, '+'}, {2, 3, '-'}, {0, 3, '-'}});
  std::vector<Vertex> c{2, 1, 0, 3};
  CHECK(circle_sign(g, c) == Sign::negative);
  CHECK(canonical_cycle(c) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(canonical_cycle({3, 0, 1, 2}) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK_THROWS_AS(cycle_edge_ids(g, std::vector<Vertex>{0, 2, 1}), InvalidCycleError);
  CHECK_THROWS_AS(cycle_edge_ids(g, std::vector<Vertex>{0, 1}), InvalidCycleError);
}

TEST_CASE("signed subgraphs") {
  auto g = make(5, {{0, 1, '-'}, {1, 2, '+'}, {2, 3, '-'}, {3, 4, '+'}});
  CHECK(positive_subgraph(g).edge_count() == 2);
  CHECK(negative_subgraph(g).vertex_count() == 5);
  auto neg = edge_induced_negative(g);
  CHECK(neg.to_host == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(neg.graph.edge_count() == 2);
  auto ind = induced_subgraph(g, std::vector<Vertex>{1, 2, 3});
  CHECK(ind.graph.edge_count() == 2);
}

TEST_CASE("4-core peels in batches") {
  // K5; vertex 5 joined to 0, 1, 2 and 6; vertex 6 a leaf.
  std::vector<SignedEdge> es;
  for (const auto& e : oracle::complete_graph(5)) es.push_back({e, Sign::positive});
  for (Vertex v : {0, 1, 2, 6}) es.push_back({Edge(5, v), Sign::positive});
  SignedGraph g(7, es);
  auto core = k_core(g, 4);
  CHECK(core.core.to_host == std::vector<Vertex>{0, 1, 2, 3, 4});
  REQUIRE(core.peel_batches.size() == 2);
  CHECK(core.peel_batches[0] == std::vector<Vertex>{6});
  CHECK(core.peel_batches[1] == std::vector<Vertex>{5});
  CHECK(k_core(g, 5).core.graph.vertex_count() == 0);
}

TEST_CASE("degrees, components and blocks") {
  // Two triangles sharing vertex 2, plus isolated vertex 5.
  auto g = make(6, {{0, 1, '-'}, {0, 2, '+'}, {1, 2, '+'}, {2, 3, '-'}, {2, 4, '-'}, {3, 4, '+'}});
  CHECK(degrees(g, 2) == Degrees{4, 2, 2});
  CHECK(max_degree(g) == 4);
  CHECK_FALSE(is_connected(g));
  CHECK(connected_components(g) == std::vector<std::vector<Vertex>>{{0, 1, 2, 3, 4}, {5}});
  CHECK(blocks(g) == std::vector<std::vector<Vertex>>{{0, 1, 2}, {2, 3, 4}});
  CHECK(is_connected(SignedGraph()));
}

TEST_CASE("bipartite and forest edge sets") {
  auto g = make(4, {{0, 1, '-'}, {1, 2, '-'}, {0, 2, '-'}, {2, 3, '-'}});
  CHECK_FALSE(is_bipartite(g.negative_edges()));
  CHECK_FALSE(is_forest(g.negative_edges()));
  auto path = edges_of(g, {Edge(0, 1), Edge(1, 2), Edge(2, 3)});
  CHECK(is_forest(path));
  auto sides = stable_bipartition(path);
  REQUIRE(sides);
  CHECK(*sides == std::vector<int>{0, 1, 0, 1});
  auto one = edges_of(g, {Edge(2, 3)});
  CHECK(*stable_bipartition(one) == std::vector<int>{-1, -1, 0, 1});
}
