#pragma once

// Signed-graph data model: an immutable underlying simple graph shared between
// all signings of it, plus the elementary operations (switching, negation,
// subgraphs, cores, cuts, degrees, connectivity, blocks).

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "negsets/errors.hpp"

namespace negsets {

using Vertex = int;
using EdgeId = int;

enum class Sign : std::int8_t { positive = 1, negative = -1 };

constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::positive : Sign::negative;
}
constexpr Sign operator-(Sign s) {
  return s == Sign::positive ? Sign::negative : Sign::positive;
}
constexpr char sign_char(Sign s) { return s == Sign::positive ? '+' : '-'; }

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool has(Vertex w) const { return w == u || w == v; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct SignedEdge {
  Edge edge;
  Sign sign = Sign::positive;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

/// The unsigned simple graph underneath a signed graph. Edges are kept in
/// lexicographic (u, v) order, and the position in that order is the EdgeId.
class Skeleton {
 public:
  Skeleton(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> incident(Vertex v) const {
    return adjacency_[v];
  }
  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }
  std::optional<EdgeId> find(Vertex a, Vertex b) const;

  bool operator==(const Skeleton& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  // Incidences sorted by neighbor index.
  std::vector<std::vector<Incidence>> adjacency_;
};

using SkeletonPtr = std::shared_ptr<const Skeleton>;

bool same_skeleton(const SkeletonPtr& a, const SkeletonPtr& b);

class EdgeSubset;
class VertexSubset;

struct Degrees {
  int total = 0;
  int positive = 0;
  int negative = 0;

  friend bool operator==(const Degrees&, const Degrees&) = default;
};

/// Simple undirected graph with a sign on every edge. Immutable value type:
/// switching and negation produce new graphs sharing the same skeleton.
class SignedGraph {
 public:
  SignedGraph() : SignedGraph(0, {}) {}
  SignedGraph(int vertex_count, const std::vector<SignedEdge>& edges);
  SignedGraph(SkeletonPtr skeleton, std::vector<Sign> signs);

  /// Same underlying graph, every edge positive.
  static SignedGraph all_positive(int vertex_count, const std::vector<Edge>& edges);
  /// Same underlying graph, every edge negative.
  static SignedGraph all_negative(int vertex_count, const std::vector<Edge>& edges);

  int vertex_count() const { return skeleton_->vertex_count(); }
  int edge_count() const { return skeleton_->edge_count(); }
  const SkeletonPtr& skeleton() const { return skeleton_; }
  std::span<const Edge> edges() const { return skeleton_->edges(); }
  const Edge& edge(EdgeId e) const { return skeleton_->edge(e); }
  Sign sign(EdgeId e) const { return signs_[e]; }
  bool is_negative(EdgeId e) const { return sign(e) == Sign::negative; }
  std::span<const Sign> signs() const { return signs_; }
  std::span<const Incidence> incident(Vertex v) const { return skeleton_->incident(v); }
  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const { return skeleton_->find(a, b); }
  bool has_edge(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }
  std::optional<Sign> sign_of(Vertex a, Vertex b) const;

  bool valid_vertex(Vertex v) const { return v >= 0 && v < vertex_count(); }

  std::vector<EdgeId> negative_edge_ids() const;
  EdgeSubset negative_edges() const;
  EdgeSubset positive_edges() const;
  EdgeSubset all_edges() const;

  /// Signed edges in canonical order.
  std::vector<SignedEdge> signed_edges() const;

  bool same_underlying(const SignedGraph& other) const {
    return same_skeleton(skeleton_, other.skeleton_);
  }

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.same_underlying(b) && a.signs_ == b.signs_;
  }

 private:
  SkeletonPtr skeleton_;
  std::vector<Sign> signs_;
};

/// A set of edges of a host graph.
class EdgeSubset {
 public:
  explicit EdgeSubset(SkeletonPtr host);
  EdgeSubset(const SignedGraph& host, std::span<const EdgeId> ids);
  /// Throws InvalidGraphError if some pair is not an edge of the host.
  EdgeSubset(const SignedGraph& host, std::span<const Edge> edges);
  EdgeSubset(SkeletonPtr host, std::vector<bool> mask);

  const SkeletonPtr& host() const { return host_; }
  bool hosted_by(const SignedGraph& g) const { return same_skeleton(host_, g.skeleton()); }
  /// Throws HostMismatchError unless hosted by `g`.
  void require_host(const SignedGraph& g, const char* operation) const;

  bool contains(EdgeId e) const { return mask_[e]; }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }
  std::vector<EdgeId> ids() const;
  std::vector<Edge> edges() const;
  const std::vector<bool>& mask() const { return mask_; }

  void insert(EdgeId e);
  void erase(EdgeId e);

  bool intersects(const EdgeSubset& other) const;
  bool is_subset_of(const EdgeSubset& other) const;
  EdgeSubset operator|(const EdgeSubset& other) const;
  EdgeSubset operator-(const EdgeSubset& other) const;
  EdgeSubset operator^(const EdgeSubset& other) const;

  friend bool operator==(const EdgeSubset& a, const EdgeSubset& b) {
    return same_skeleton(a.host_, b.host_) && a.mask_ == b.mask_;
  }
  /// Ordered by size, then lexicographically by edge list.
  friend bool operator<(const EdgeSubset& a, const EdgeSubset& b);

 private:
  SkeletonPtr host_;
  std::vector<bool> mask_;
  int count_ = 0;
};

/// A set of vertices of a host graph, interpreted as a switching.
class VertexSubset {
 public:
  explicit VertexSubset(int vertex_count);
  VertexSubset(int vertex_count, std::span<const Vertex> members);

  int vertex_count() const { return static_cast<int>(mask_.size()); }
  bool contains(Vertex v) const { return mask_[v]; }
  int size() const;
  std::vector<Vertex> members() const;
  void insert(Vertex v);
  void erase(Vertex v);
  void toggle(Vertex v);
  VertexSubset complement() const;
  VertexSubset operator^(const VertexSubset& other) const;
  void require_host(const SignedGraph& g, const char* operation) const;

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

 private:
  std::vector<bool> mask_;
};

/// A graph extracted from a host together with the map back to host vertices.
struct Subgraph {
  SignedGraph graph;
  std::vector<Vertex> to_host;
};

struct CoreResult {
  Subgraph core;
  /// Deletion batches in peel order; each batch holds host vertices that had
  /// degree < k at that stage.
  std::vector<std::vector<Vertex>> peel_batches;
};

SignedGraph switch_by(const SignedGraph& g, const VertexSubset& x);
SignedGraph negate_edges(const SignedGraph& g, const EdgeSubset& y);
EdgeSubset cut(const SignedGraph& g, const VertexSubset& x);

/// Edge ids of a vertex cycle (including the closing edge). Throws
/// InvalidCycleError unless the sequence is a circle of `g`.
std::vector<EdgeId> cycle_edge_ids(const SignedGraph& g, std::span<const Vertex> cycle);
Sign circle_sign(const SignedGraph& g, std::span<const Vertex> cycle);
/// Rotates to start at the smallest vertex and orients toward the smaller neighbor.
std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle);

SignedGraph positive_subgraph(const SignedGraph& g);
SignedGraph negative_subgraph(const SignedGraph& g);
/// Negative edges together with the vertices they touch.
Subgraph edge_induced_negative(const SignedGraph& g);
/// `vertices` must be distinct host vertices; the result uses their order.
Subgraph induced_subgraph(const SignedGraph& g, std::span<const Vertex> vertices);

CoreResult k_core(const SignedGraph& g, int k);

Degrees degrees(const SignedGraph& g, Vertex v);
int max_degree(const SignedGraph& g);
bool is_connected(const SignedGraph& g);
/// Components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const SignedGraph& g);
/// Block decomposition (2-connected components and bridges) as sorted vertex
/// lists; cut vertices appear in every block containing them. Isolated
/// vertices belong to no block.
std::vector<std::vector<Vertex>> blocks(const SignedGraph& g);

/// Side (0/1) per vertex of a proper 2-coloring of the subgraph formed by
/// `edges`, or nullopt when that subgraph has an odd circle. Vertices touched
/// by no edge get side -1; each component's smallest vertex gets side 0.
std::optional<std::vector<int>> stable_bipartition(const EdgeSubset& edges);
bool is_bipartite(const EdgeSubset& edges);
bool is_forest(const EdgeSubset& edges);

std::string to_string(const EdgeSubset& s);

}  // namespace negsets
