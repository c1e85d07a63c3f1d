#pragma once

// Bipartite and acyclic negation sets.
//
// acyclic_negation() reduces a graph to its 4-core, removes every fully
// negative circle of each block of the core by a sequence of switchings that
// follows the constructive case analysis for quartic graphs (chords, positive
// neighbours of low or high negative degree, neighbours shared by two circle
// vertices, and circles that have to be walked along a path towards each
// other), and then re-adds the peeled vertices batch by batch.

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "negsets/core.hpp"

namespace negsets {

/// One switching made by the acyclic algorithm.
struct StepRecord {
  /// Algorithm step that made the switching (1..15).
  int step = 0;
  /// Host vertices switched together.
  std::vector<Vertex> switched;
  std::string note;
};

struct AcyclicStats {
  int iterations = 0;
  /// Fully negative circles in the working block at every return to step 2.
  std::vector<int> circle_counts;
  /// Switchings that should have removed a fully negative circle but did not.
  int progress_violations = 0;
};

struct AcyclicNegationResult {
  VertexSubset switching;
  EdgeSubset negation_set;
  AcyclicStats stats;
  std::vector<StepRecord> trace;
};

/// The 4-core contains a block in the switching class of -K5, which has no
/// acyclic (or even bipartite) negation set.
struct MinusK5Exception {
  std::vector<Vertex> block;
  int step = 0;
};

using AcyclicOutcome = std::variant<AcyclicNegationResult, MinusK5Exception>;

/// Requires a connected graph whose 4-core has maximum degree at most 4.
/// Throws PreconditionError otherwise and BudgetExceededError if the main
/// loop exceeds 10 |V| |E| iterations.
AcyclicOutcome acyclic_negation(const SignedGraph& g);

/// A negation set disjoint from E^-(g), which exists iff E^-(g) is bipartite.
/// Switches by one class of every component of the negative subgraph;
/// remaining vertices follow their positive neighbours. Throws
/// PreconditionError when E^-(g) is not bipartite.
EdgeSubset disjoint_partner(const SignedGraph& g);

/// For an antibalanced graph with a proper coloring in {1,2,3,4}: a switching
/// whose negative edge set lies inside the cut between colors {1,3} and {2,4}.
VertexSubset bipartite_negation_for_antibalanced_planar(const SignedGraph& g,
                                                        std::span<const int> coloring);

/// A circle of the negative subgraph, or nullopt if it is a forest. Picks the
/// smallest vertex lying on such a circle, then its smallest negative
/// neighbour on one, closed by a shortest negative path.
std::optional<std::vector<Vertex>> find_fully_negative_circle(const SignedGraph& g);

bool fully_negative_path_exists(const SignedGraph& g, Vertex u, Vertex v);

/// Number of circles of the negative subgraph. Linear when every negative
/// degree is at most 2, exhaustive enumeration otherwise.
long count_fully_negative_circles(const SignedGraph& g);

}  // namespace negsets
