#pragma once

#include <optional>
#include <span>
#include <vector>

#include "negsets/core.hpp"

namespace negsets {

/// side[v] is 0 (class X) or 1 (class Y); negative edges are exactly the
/// edges whose ends lie on different sides. The smallest vertex of every
/// component is on side 0.
struct HararyBipartition {
  std::vector<int> side;

  VertexSubset y_side() const;
};

/// Either a Harary bipartition (balanced) or a negative circle (unbalanced).
struct BalanceWitness {
  std::optional<HararyBipartition> bipartition;
  /// Canonical vertex cycle; empty when balanced.
  std::vector<Vertex> negative_circle;

  bool balanced() const { return bipartition.has_value(); }
};

BalanceWitness check_balance(const SignedGraph& g);
bool is_balanced(const SignedGraph& g);

/// True iff negating `b` balances `g`.
bool is_negation_set(const SignedGraph& g, const EdgeSubset& b);

/// The negative edge set of g switched by x.
EdgeSubset negation_set_from_switching(const SignedGraph& g, const VertexSubset& x);

/// True iff some switching makes every edge negative.
bool is_antibalanced(const SignedGraph& g);

/// Switching that turns an antibalanced graph all-negative, if one exists.
std::optional<VertexSubset> antibalancing_switch(const SignedGraph& g);

/// True iff g1 and g2 share an underlying graph and one switches to the other.
bool switching_equivalent(const SignedGraph& g1, const SignedGraph& g2);

/// Edge of a signed multigraph; parallel edges of either sign are allowed.
struct MultiEdge {
  int a;
  int b;
  Sign sign;
};

/// Harary sides of a signed multigraph on `vertex_count` vertices, or nullopt
/// when unbalanced. A positive and a negative edge between the same pair form
/// a negative digon and make the graph unbalanced.
std::optional<std::vector<int>> multigraph_harary_sides(int vertex_count,
                                                        std::span<const MultiEdge> edges);

}  // namespace negsets
