#include "doctest.h"
#include "helpers.hpp"
#include "negsets/balance.hpp"

using namespace negsets;
using namespace negsets::oracle;
using negsets::testing::signing;

// Counts from an independent exhaustive enumeration.
TEST_CASE("enumeration sizes and frustration") {
  auto c3 = testing::cycle_one_negative(3);
  CHECK(enumerate_negation_sets(c3).negation_sets.size() == 4);
  CHECK(frustration_index(c3) == 1);
  CHECK(minimum_negation_sets(c3).size() == 3);

  auto c5 = testing::cycle_one_negative(5);
  CHECK(enumerate_negation_sets(c5).negation_sets.size() == 16);

  auto k5 = testing::minus_complete(5);
  CHECK(enumerate_negation_sets(k5).negation_sets.size() == 16);
  CHECK(frustration_index(k5) == 4);
  CHECK(minimum_negation_sets(k5).size() == 10);

  auto k4 = testing::minus_complete(4);
  CHECK(frustration_index(k4) == 2);
  CHECK(minimum_negation_sets(k4).size() == 3);

  auto petersen_edges = std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7},
                                          {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}};
  auto petersen = SignedGraph::all_negative(10, petersen_edges);
  auto all = enumerate_negation_sets(petersen);
  CHECK(all.negation_sets.size() == 512);
  CHECK(all.negation_sets.front().size() == 3);
  CHECK(minimum_negation_sets(petersen).size() == 5);

  auto cube = signing(8, cube_graph(), {Edge(0, 1)});
  CHECK(enumerate_negation_sets(cube).negation_sets.size() == 128);
}

TEST_CASE("enumeration is sorted, closed under switching and deduplicated") {
  auto g = signing(5, k4_plus_pendant(), {Edge(0, 1), Edge(0, 4)});
  auto all = enumerate_negation_sets(g);
  CHECK(all.negation_sets.size() == 16);
  CHECK(std::is_sorted(all.negation_sets.begin(), all.negation_sets.end()));
  for (const auto& s : all.negation_sets) {
    auto h = negate_edges(g, s ^ g.negative_edges());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      CHECK(all.contains(switch_by(h, VertexSubset(5, std::vector<Vertex>{v})).negative_edges()));
  }
}

TEST_CASE("oracle guards") {
  auto big = SignedGraph::all_positive(17, cycle_graph(17));
  CHECK_THROWS_AS(enumerate_negation_sets(big), CapExceededError);
  CHECK_NOTHROW(enumerate_negation_sets(big, 17));
  auto split = testing::make(4, {{0, 1, '-'}, {2, 3, '+'}});
  CHECK_THROWS_AS(enumerate_negation_sets(split), PreconditionError);
  auto c3 = testing::cycle_one_negative(3);
  CHECK_THROWS_AS(brute_is_minimal(c3, testing::edges_of(c3, {})), PreconditionError);
}

TEST_CASE("brute-force minimality, uniqueness and packing") {
  auto c3 = testing::cycle_one_negative(3);
  CHECK(brute_is_minimal(c3, c3.negative_edges()));
  CHECK_FALSE(brute_is_minimal(c3, c3.all_edges()));
  CHECK_FALSE(brute_is_unique_minimum(c3, c3.negative_edges()));

  auto k6 = signing(6, complete_graph(6), {Edge(0, 1), Edge(2, 3)});
  CHECK(brute_is_unique_minimum(k6, k6.negative_edges()));

  auto c5 = testing::cycle_one_negative(5);
  auto p = brute_packing_number(c5, c5.negative_edges());
  CHECK(p.size == 5);
  CHECK(p.family.front() == c5.negative_edges());
  auto k4 = signing(4, complete_graph(4), {Edge(0, 1)});
  CHECK(brute_packing_number(k4, k4.negative_edges()).size == 3);
  CHECK(brute_packing_number(testing::minus_complete(4), testing::minus_complete(4).all_edges()).size == 1);
}

TEST_CASE("corpus") {
  CHECK(all_signings(3, cycle_graph(3)).size() == 8);
  CHECK(complete_graph(5).size() == 10);
  CHECK(cube_graph().size() == 12);
  auto corpus = standard_corpus();
  CHECK(corpus.size() == 8 + 16 + 32 + 64 + 64 + 1024 + 128 + 4096 + 200);
  CorpusOptions small;
  small.include_k5 = false;
  small.include_cube = false;
  small.random_count = 10;
  CHECK(standard_corpus(small).size() == 8 + 16 + 32 + 64 + 64 + 128 + 10);
  for (const auto& e : standard_corpus(small)) {
    CHECK(is_connected(e.graph));
    CHECK(e.graph.vertex_count() <= 8);
  }
}

TEST_CASE("random generators") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    auto q = random_quartic(rng, 5 + t, 0.5);
    CHECK(is_connected(q));
    for (Vertex v = 0; v < q.vertex_count(); ++v) CHECK(q.incident(v).size() == 4);
    auto b = random_connected_bounded_degree(rng, 3 + t, 3, 20, 0.5);
    CHECK(is_connected(b));
    CHECK(max_degree(b) <= 3);
    auto k = random_complete_signing(rng, 6, 4);
    CHECK(k.negative_edges().size() == 4);
  }
}
