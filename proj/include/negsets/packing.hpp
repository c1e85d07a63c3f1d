#pragma once

// Packing number of the negative edge set B = E^-(g): the size of the largest
// family of pairwise disjoint negation sets containing B. packing_number()
// returns one plus the largest positive distance between the classes of a
// stable bipartition of the negative subgraph, found by scanning a nested
// sequence of signed multigraphs on the bipartition classes for the first
// unbalanced one, together with a disjoint family of that size.
//
// That value is exact when the negative subgraph is connected. With several
// components it is a lower bound: disjoint negation sets may orient the
// components differently. C5 with negative edges 01, 12, 34 has value 2 while
// {01, 12, 34}, {23}, {04} are pairwise disjoint negation sets.

#include <limits>
#include <optional>
#include <vector>

#include "negsets/balance.hpp"
#include "negsets/core.hpp"

namespace negsets {

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Components of the edge-induced negative subgraph with their stable
/// bipartitions. Class 2i is the side of component i holding its smallest
/// vertex, class 2i+1 the other side. Components are ordered by smallest vertex.
struct NegativeComponentClasses {
  std::vector<std::vector<Vertex>> classes;

  int component_count() const { return static_cast<int>(classes.size() / 2); }
  int class_count() const { return static_cast<int>(classes.size()); }
  static int mirror(int cls) { return cls ^ 1; }
};

/// d^+ between every pair of classes; kUnreachable when no positive path
/// exists. The diagonal is 0 and unused.
using ClassDistances = std::vector<std::vector<int>>;

/// Signed multigraph on the classes: the fixed negative edges (2i, 2i+1) plus
/// positive edges, possibly parallel to a negative one.
struct ClassGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> positive;
  std::vector<std::pair<int, int>> negative;

  std::vector<MultiEdge> edges() const;
  bool balanced() const;
  std::optional<std::vector<int>> harary_sides() const;
  bool has_negative_digon() const;
};

/// Throws PreconditionError when E^- is empty or not bipartite.
NegativeComponentClasses negative_component_classes(const SignedGraph& g);

/// Multi-source breadth-first search over the positive subgraph from each class.
ClassDistances class_distances(const SignedGraph& g, const NegativeComponentClasses& classes);

/// Distinct finite distances between distinct classes, ascending (w_1 < ... < w_l).
std::vector<int> distance_thresholds(const ClassDistances& distances);

/// The class graph for threshold index k (1-based). Throws PreconditionError
/// when k is outside 1..l.
ClassGraph build_phi(const NegativeComponentClasses& classes, const ClassDistances& distances,
                     int k);

struct PackingResult {
  int packing_number = 1;
  /// Pairwise disjoint negation sets; the first member is B.
  std::vector<EdgeSubset> family;
  /// Realizing stable bipartition {B1, B2} of the negative subgraph.
  std::vector<Vertex> side_one;
  std::vector<Vertex> side_two;
  /// w_p = d^+(B1, B2); absent when B is not bipartite.
  std::optional<int> distance;

  // Scan record.
  std::vector<int> thresholds;
  /// phi_balanced[k-1] is the balance of the class graph for index k.
  std::vector<bool> phi_balanced;
  int first_unbalanced = 0;
  /// First index whose threshold reaches some intra-component class distance.
  std::optional<int> digon_index;
  /// Layers S_0 .. S_{w_p - 1}.
  std::vector<VertexSubset> layers;
};

/// Requires a connected unbalanced graph. A non-bipartite E^- has packing
/// number 1. Throws PreconditionError otherwise.
PackingResult packing_number(const SignedGraph& g);

/// Shortest positive-path distance from `sources` to every vertex.
std::vector<int> positive_distances_from(const SignedGraph& g, const std::vector<Vertex>& sources);

}  // namespace negsets
