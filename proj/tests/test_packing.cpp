#include "doctest.h"
#include "helpers.hpp"
#include "negsets/balance.hpp"
#include "negsets/oracle.hpp"
#include "negsets/packing.hpp"

using namespace negsets;
using negsets::testing::signing;

namespace {

std::vector<Edge> petersen() {
  return {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7},
          {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}};
}

void check_family(const SignedGraph& g, const PackingResult& r) {
  REQUIRE(static_cast<int>(r.family.size()) == r.packing_number);
  CHECK(r.family.front() == g.negative_edges());
  for (std::size_t i = 0; i < r.family.size(); ++i) {
    CHECK(is_negation_set(g, r.family[i]));
    for (std::size_t j = i + 1; j < r.family.size(); ++j) CHECK_FALSE(r.family[i].intersects(r.family[j]));
  }
}

}  // namespace

TEST_CASE("packing numbers agree with brute force") {
  struct Case {
    const char* name;
    SignedGraph g;
    int expected;
  };
  std::vector<Edge> k4_pendant = oracle::k4_plus_pendant();
  const std::vector<Case> cases{
      {"C3, one negative", testing::cycle_one_negative(3), 3},
      {"C5, one negative", testing::cycle_one_negative(5), 5},
      {"K4, one negative", signing(4, oracle::complete_graph(4), {Edge(0, 1)}), 3},
      {"K5, one negative", signing(5, oracle::complete_graph(5), {Edge(0, 1)}), 3},
      {"K6, two disjoint negative", signing(6, oracle::complete_graph(6), {Edge(0, 1), Edge(2, 3)}), 2},
      {"K4 + pendant", signing(5, k4_pendant, {Edge(0, 1), Edge(0, 4)}), 3},
      {"cube, one negative", signing(8, oracle::cube_graph(), {Edge(0, 1)}), 4},
      {"Petersen, one negative", signing(10, petersen(), {Edge(0, 1)}), 5},
  };
  for (const auto& c : cases) {
    CAPTURE(c.name);
    auto r = packing_number(c.g);
    CHECK(r.packing_number == c.expected);
    check_family(c.g, r);
  }
}

TEST_CASE("C5 with one negative edge") {
  auto g = testing::cycle_one_negative(5);
  auto classes = negative_component_classes(g);
  CHECK(classes.classes == std::vector<std::vector<Vertex>>{{0}, {1}});
  auto d = class_distances(g, classes);
  CHECK(d[0][1] == 4);
  CHECK(distance_thresholds(d) == std::vector<int>{4});
  auto phi = build_phi(classes, d, 1);
  CHECK(phi.has_negative_digon());
  CHECK_FALSE(phi.balanced());

  auto r = packing_number(g);
  CHECK(r.side_one == std::vector<Vertex>{0});
  CHECK(r.side_two == std::vector<Vertex>{1});
  CHECK(r.distance == 4);
  CHECK(r.first_unbalanced == 1);
  CHECK(r.digon_index == 1);
  REQUIRE(r.layers.size() == 4);
  CHECK(r.layers[0].members() == std::vector<Vertex>{0});
  CHECK(r.layers[1].members() == std::vector<Vertex>{0, 4});
}

TEST_CASE("no digon when every component is positively separated") {
  // Vertex 2 and vertex 5 have no positive edges.
  auto g = testing::make(7, {{0, 1, '+'}, {0, 2, '-'}, {1, 2, '-'}, {1, 4, '+'}, {2, 3, '-'},
                             {3, 6, '+'}, {4, 5, '-'}, {4, 6, '-'}});
  auto r = packing_number(g);
  CHECK(r.packing_number == 2);
  CHECK_FALSE(r.digon_index);
  CHECK(r.first_unbalanced == 1);
  check_family(g, r);
}

TEST_CASE("several negative components give a lower bound") {
  auto g = testing::make(5, {{0, 1, '-'}, {1, 2, '-'}, {2, 3, '+'}, {3, 4, '-'}, {0, 4, '+'}});
  auto r = packing_number(g);
  CHECK(r.packing_number == 2);
  CHECK(r.distance == 1);
  check_family(g, r);
  CHECK(oracle::brute_packing_number(g, g.negative_edges()).size == 3);
}

TEST_CASE("non-bipartite negative edges pack alone") {
  auto g = testing::minus_complete(4);
  auto r = packing_number(g);
  CHECK(r.packing_number == 1);
  CHECK_FALSE(r.distance);
  check_family(g, r);
}

TEST_CASE("packing preconditions") {
  auto balanced = SignedGraph::all_positive(4, oracle::cycle_graph(4));
  CHECK_THROWS_AS(packing_number(balanced), PreconditionError);
  auto even = signing(4, oracle::cycle_graph(4), {Edge(0, 1), Edge(2, 3)});
  CHECK_THROWS_AS(packing_number(even), PreconditionError);
  auto split = testing::make(4, {{0, 1, '-'}, {2, 3, '+'}});
  CHECK_THROWS_AS(packing_number(split), PreconditionError);
  auto g = testing::cycle_one_negative(5);
  auto classes = negative_component_classes(g);
  CHECK_THROWS_AS(build_phi(classes, class_distances(g, classes), 2), PreconditionError);
}

TEST_CASE("class-graph scan is monotone and ends in a digon") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    auto g = oracle::random_connected(rng, 4 + t % 8, 0.3, 0.3);
    if (is_balanced(g) || !is_bipartite(g.negative_edges())) continue;
    auto r = packing_number(g);
    ++checked;
    check_family(g, r);
    for (std::size_t k = 1; k < r.phi_balanced.size(); ++k) CHECK(r.phi_balanced[k - 1] >= r.phi_balanced[k]);
    CHECK(r.first_unbalanced >= 1);
    // Without a finite distance inside some component no digon index exists.
    if (!r.digon_index) continue;
    CHECK(r.first_unbalanced <= *r.digon_index);
    auto classes = negative_component_classes(g);
    CHECK(build_phi(classes, class_distances(g, classes), *r.digon_index).has_negative_digon());
  }
  CHECK(checked > 50);
}
