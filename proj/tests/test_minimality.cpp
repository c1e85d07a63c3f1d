#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "negsets/minimality.hpp"

using namespace negsets;
using negsets::testing::edges_of;
using negsets::testing::signing;

namespace {

SignedGraph k6_two_negative() {
  return signing(6, oracle::complete_graph(6), {Edge(0, 1), Edge(2, 3)});
}

}  // namespace

TEST_CASE("minimal iff the complement stays connected") {
  auto g = testing::cycle_one_negative(3);
  CHECK(is_minimal(g, edges_of(g, {Edge(0, 1)})));
  CHECK_FALSE(is_minimal(g, g.all_edges()));
  CHECK_THROWS_AS(is_minimal(g, edges_of(g, {})), PreconditionError);

  auto cube = signing(8, oracle::cube_graph(), {Edge(0, 1)});
  CHECK(is_minimal(cube, cube.negative_edges()));
  // Switching vertex 0 of the cube: its other two edges become negative.
  auto b = edges_of(cube, {Edge(0, 2), Edge(0, 4)});
  CHECK(is_minimal(cube, b));
  auto disconnected = testing::make(4, {{0, 1, '-'}, {2, 3, '+'}});
  CHECK_THROWS_AS(is_minimal(disconnected, disconnected.negative_edges()), PreconditionError);
}

TEST_CASE("triangle certificate on complete graphs") {
  auto g = k6_two_negative();
  auto cert = triangle_certificate_for_complete(g, g.negative_edges());
  REQUIRE(cert);
  CHECK(cert->circles == std::vector<std::vector<Vertex>>{{0, 1, 4}, {2, 3, 4}});
  CHECK(verify_disjoint_circle_certificate(g, g.negative_edges(), *cert));

  auto k5 = signing(5, oracle::complete_graph(5), {Edge(0, 1)});
  auto one = triangle_certificate_for_complete(k5, k5.negative_edges());
  REQUIRE(one);
  CHECK(one->circles == std::vector<std::vector<Vertex>>{{0, 1, 2}});

  auto minus = testing::minus_complete(5);
  CHECK_FALSE(triangle_certificate_for_complete(minus, minus.negative_edges()));
  CHECK_THROWS_AS(triangle_certificate_for_complete(g, edges_of(g, {Edge(0, 1)})), PreconditionError);
  auto c5 = testing::cycle_one_negative(5);
  CHECK_THROWS_AS(triangle_certificate_for_complete(c5, c5.negative_edges()), PreconditionError);
}

TEST_CASE("disjoint-circle verifier rejects broken certificates") {
  auto g = k6_two_negative();
  auto b = g.negative_edges();
  using C = DisjointCircleCertificate;
  CHECK(verify_disjoint_circle_certificate(g, b, C{{{0, 1, 4}, {2, 3, 5}}}));
  // Too few circles.
  CHECK_FALSE(verify_disjoint_circle_certificate(g, b, C{{{0, 1, 4}}}));
  // Shared edge 0-4.
  CHECK_FALSE(verify_disjoint_circle_certificate(g, b, C{{{0, 1, 4}, {0, 4, 2, 3}}}));
  // Positive circle.
  CHECK_FALSE(verify_disjoint_circle_certificate(g, b, C{{{0, 1, 4}, {2, 4, 5}}}));
  // Not a circle.
  CHECK_THROWS_AS(verify_disjoint_circle_certificate(g, b, C{{{0, 1, 4}, {2, 2, 3}}}),
                  MalformedCertificateError);
  CHECK_THROWS_AS(verify_disjoint_circle_certificate(g, b, C{{{0, 1}, {2, 3, 5}}}),
                  MalformedCertificateError);
  CHECK_THROWS_AS(verify_disjoint_circle_certificate(g, edges_of(g, {Edge(0, 1)}), C{{{0, 1, 4}}}),
                  PreconditionError);
}

TEST_CASE("two circles per edge") {
  auto g = k6_two_negative();
  auto b = g.negative_edges();
  TwoCirclePerEdgeCertificate cert{{{Edge(0, 1), {0, 1, 4}, {0, 1, 5}},
                                    {Edge(2, 3), {2, 3, 4}, {2, 3, 5}}}};
  CHECK(verify_two_circle_certificate(g, b, cert));

  auto missing = cert;
  missing.pairs.pop_back();
  CHECK_FALSE(verify_two_circle_certificate(g, b, missing));

  auto shared = cert;
  shared.pairs[1].first = {2, 3, 0, 4};  // uses 0-4, already in the first pair
  CHECK_FALSE(verify_two_circle_certificate(g, b, shared));

  auto same = cert;
  same.pairs[0].second = {0, 1, 4};
  CHECK_FALSE(verify_two_circle_certificate(g, b, same));

  auto off_edge = cert;
  off_edge.pairs[0].first = {0, 4, 5};
  CHECK_FALSE(verify_two_circle_certificate(g, b, off_edge));
}

TEST_CASE("size bound for unique minimum") {
  auto g = k6_two_negative();
  CHECK(unique_minimum_by_size(g, g.negative_edges()));
  auto three = signing(6, oracle::complete_graph(6), {Edge(0, 1), Edge(2, 3), Edge(4, 5)});
  CHECK_FALSE(unique_minimum_by_size(three, three.negative_edges()));
  auto k5 = signing(5, oracle::complete_graph(5), {Edge(0, 1)});
  CHECK(unique_minimum_by_size(k5, k5.negative_edges()));
}

TEST_CASE("Misra-Gries colouring is proper within Delta + 1") {
  for (int n = 2; n <= 9; ++n) {
    auto k = testing::minus_complete(n);
    auto colors = proper_edge_coloring(k.all_edges());
    int used = 0;
    for (Vertex v = 0; v < n; ++v) {
      std::set<int> seen;
      for (const auto& inc : k.incident(v)) {
        CHECK(colors[inc.edge] >= 0);
        CHECK(seen.insert(colors[inc.edge]).second);
        used = std::max(used, colors[inc.edge] + 1);
      }
    }
    CHECK(used <= n);
  }
}
