#pragma once

#include <initializer_list>
#include <tuple>
#include <vector>

#include "negsets/core.hpp"
#include "negsets/oracle.hpp"

namespace negsets::testing {

// make(3, {{0, 1, '-'}, {1, 2, '+'}})
inline SignedGraph make(int n, std::initializer_list<std::tuple<int, int, char>> edges) {
  std::vector<SignedEdge> es;
  for (auto [u, v, s] : edges) es.push_back({Edge(u, v), s == '-' ? Sign::negative : Sign::positive});
  return SignedGraph(n, es);
}

// Underlying edges with the listed pairs negative.
inline SignedGraph signing(int n, const std::vector<Edge>& edges, std::initializer_list<Edge> negative) {
  std::vector<SignedEdge> es;
  for (const auto& e : edges) {
    bool neg = false;
    for (const auto& x : negative) neg = neg || x == e;
    es.push_back({e, neg ? Sign::negative : Sign::positive});
  }
  return SignedGraph(n, es);
}

inline EdgeSubset edges_of(const SignedGraph& g, std::initializer_list<Edge> es) {
  std::vector<Edge> v(es);
  return EdgeSubset(g, std::span<const Edge>(v));
}

inline SignedGraph cycle_one_negative(int n) {
  return signing(n, oracle::cycle_graph(n), {Edge(0, 1)});
}

inline SignedGraph minus_complete(int n) {
  return SignedGraph::all_negative(n, oracle::complete_graph(n));
}

}  // namespace negsets::testing
