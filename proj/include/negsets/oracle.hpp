#pragma once

// Brute-force ground truth at desk scale. Every negation set of a connected
// graph is the negative edge set of some switching, so enumerating the
// 2^(n-1) switchings that leave the last vertex unswitched lists each
// negation set exactly once.

#include <cstdint>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "negsets/core.hpp"

namespace negsets::oracle {

inline constexpr int kDefaultMaxVertices = 16;

struct SwitchingEnumeration {
  SignedGraph host;
  /// Distinct negation sets sorted by (size, lexicographic edge list).
  std::vector<EdgeSubset> negation_sets;

  /// Edge masks of `negation_sets`, for membership tests.
  std::unordered_set<std::vector<bool>> index;

  bool contains(const EdgeSubset& b) const;
};

/// Requires a connected graph with at most `max_vertices` vertices.
SwitchingEnumeration enumerate_negation_sets(const SignedGraph& g,
                                             int max_vertices = kDefaultMaxVertices);

int frustration_index(const SignedGraph& g, int max_vertices = kDefaultMaxVertices);
std::vector<EdgeSubset> minimum_negation_sets(const SignedGraph& g,
                                              int max_vertices = kDefaultMaxVertices);

/// Minimal: no negation set of g is a proper subset of b.
bool brute_is_minimal(const SignedGraph& g, const EdgeSubset& b,
                      int max_vertices = kDefaultMaxVertices);
bool brute_is_unique_minimum(const SignedGraph& g, const EdgeSubset& b,
                             int max_vertices = kDefaultMaxVertices);
bool brute_is_minimal(const SwitchingEnumeration& all, const EdgeSubset& b);
bool brute_is_unique_minimum(const SwitchingEnumeration& all, const EdgeSubset& b);

struct BrutePacking {
  int size = 0;
  /// Pairwise disjoint negation sets; the first member is b.
  std::vector<EdgeSubset> family;
};

/// Largest family of pairwise disjoint negation sets containing b, found by
/// exact branch and bound over the enumeration.
BrutePacking brute_packing_number(const SignedGraph& g, const EdgeSubset& b,
                                  int max_vertices = kDefaultMaxVertices);
BrutePacking brute_packing_number(const SwitchingEnumeration& all, const EdgeSubset& b);

// --- corpus ---------------------------------------------------------------

std::vector<Edge> cycle_graph(int n);
std::vector<Edge> complete_graph(int n);
/// K4 on {0,1,2,3} plus vertex 4 attached to vertex 0.
std::vector<Edge> k4_plus_pendant();
std::vector<Edge> cube_graph();

/// Every one of the 2^|E| signings (|E| <= 20).
std::vector<SignedGraph> all_signings(int vertex_count, const std::vector<Edge>& edges);

/// Random connected simple graph: random spanning tree plus each other pair
/// with probability `extra_edge_probability`; each edge negative with
/// probability `negative_probability`.
SignedGraph random_connected(std::mt19937_64& rng, int vertex_count,
                             double extra_edge_probability, double negative_probability);

/// Random connected simple graph with maximum degree at most `max_degree`.
SignedGraph random_connected_bounded_degree(std::mt19937_64& rng, int vertex_count,
                                            int max_degree, int extra_edge_attempts,
                                            double negative_probability);

/// Random connected 4-regular simple graph (vertex_count >= 5), random signs.
SignedGraph random_quartic(std::mt19937_64& rng, int vertex_count, double negative_probability);

/// Random signing of K_n with exactly `negative_count` negative edges.
SignedGraph random_complete_signing(std::mt19937_64& rng, int vertex_count, int negative_count);

struct CorpusEntry {
  std::string name;
  SignedGraph graph;
};

struct CorpusOptions {
  bool include_k5 = true;
  bool include_cube = true;
  int random_count = 200;
  int random_max_vertices = 8;
  std::uint64_t seed = 20240601;
};

/// All signings of C3..C6, K4, K5, K4 plus a pendant vertex and the 3-cube,
/// followed by seeded random connected graphs.
std::vector<CorpusEntry> standard_corpus(const CorpusOptions& options = {});

}  // namespace negsets::oracle
