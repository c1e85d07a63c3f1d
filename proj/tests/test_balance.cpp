#include "doctest.h"
#include "helpers.hpp"
#include "negsets/balance.hpp"

using namespace negsets;
using negsets::testing::edges_of;
using negsets::testing::make;

TEST_CASE("balanced graphs get a Harary bipartition") {
  // E^- is the cut between {0, 1} and {2, 3}.
  auto g = make(4, {{0, 1, '+'}, {1, 2, '-'}, {2, 3, '+'}, {0, 3, '-'}, {0, 2, '-'}});
  auto w = check_balance(g);
  REQUIRE(w.balanced());
  CHECK(w.bipartition->side == std::vector<int>{0, 0, 1, 1});
  CHECK(w.bipartition->y_side().members() == std::vector<Vertex>{2, 3});
  CHECK(w.negative_circle.empty());
  CHECK(is_balanced(SignedGraph()));
}

TEST_CASE("unbalanced graphs get a negative circle") {
  auto g = testing::cycle_one_negative(5);
  auto w = check_balance(g);
  REQUIRE_FALSE(w.balanced());
  CHECK(w.negative_circle == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(circle_sign(g, w.negative_circle) == Sign::negative);

  auto k4 = testing::minus_complete(4);
  auto c = check_balance(k4).negative_circle;
  CHECK(c.size() == 3);
  CHECK(circle_sign(k4, c) == Sign::negative);
}

TEST_CASE("negation sets") {
  auto g = testing::cycle_one_negative(3);
  CHECK(is_negation_set(g, edges_of(g, {Edge(0, 1)})));
  CHECK(is_negation_set(g, edges_of(g, {Edge(1, 2)})));
  CHECK(is_negation_set(g, edges_of(g, {Edge(0, 1), Edge(0, 2), Edge(1, 2)})));
  CHECK_FALSE(is_negation_set(g, edges_of(g, {})));
  CHECK_FALSE(is_negation_set(g, edges_of(g, {Edge(0, 1), Edge(1, 2)})));
  VertexSubset x(3, std::vector<Vertex>{1});
  CHECK(negation_set_from_switching(g, x) == edges_of(g, {Edge(1, 2)}));
  auto other = make(3, {{0, 1, '-'}, {1, 2, '+'}});
  CHECK_THROWS_AS(is_negation_set(g, edges_of(other, {Edge(0, 1)})), HostMismatchError);
}

TEST_CASE("antibalance") {
  auto k4 = testing::minus_complete(4);
  CHECK(is_antibalanced(k4));
  auto c4 = SignedGraph::all_positive(4, oracle::cycle_graph(4));
  CHECK(is_antibalanced(c4));
  auto x = antibalancing_switch(c4);
  REQUIRE(x);
  CHECK(switch_by(c4, *x).negative_edges().size() == 4);
  auto c5 = SignedGraph::all_positive(5, oracle::cycle_graph(5));
  CHECK_FALSE(is_antibalanced(c5));
  CHECK_FALSE(antibalancing_switch(c5));
}

TEST_CASE("switching equivalence") {
  auto a = testing::cycle_one_negative(5);
  auto b = switch_by(a, VertexSubset(5, std::vector<Vertex>{1, 3}));
  CHECK(switching_equivalent(a, b));
  auto all_pos = SignedGraph(a.skeleton(), std::vector<Sign>(5, Sign::positive));
  CHECK_FALSE(switching_equivalent(a, all_pos));
  auto k5 = testing::minus_complete(5);
  CHECK_FALSE(switching_equivalent(a, k5));
}

TEST_CASE("signed multigraph balance") {
  std::vector<MultiEdge> path{{0, 1, Sign::negative}, {1, 2, Sign::positive}};
  CHECK(*multigraph_harary_sides(4, path) == std::vector<int>{0, 1, 1, 0});
  std::vector<MultiEdge> digon{{0, 1, Sign::negative}, {1, 0, Sign::positive}};
  CHECK_FALSE(multigraph_harary_sides(2, digon));
}
