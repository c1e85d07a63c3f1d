#include "negsets/core.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace negsets {

Skeleton::Skeleton(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
  if (vertex_count < 0) throw InvalidGraphError("negative vertex count");
  for (const Edge& e : edges) {
    if (e.u == e.v) throw InvalidGraphError("loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= vertex_count) {
      throw InvalidGraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                              " out of range");
    }
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw InvalidGraphError("parallel edge " + std::to_string(dup->u) + "-" +
                            std::to_string(dup->v));
  }
  edges_ = std::move(edges);
  adjacency_.resize(n_);
  for (EdgeId id = 0; id < edge_count(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[e.u].push_back({e.v, id});
    adjacency_[e.v].push_back({e.u, id});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
  }
}

std::optional<EdgeId> Skeleton::find(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return std::nullopt;
  const auto& list = adjacency_[a];
  auto it = std::lower_bound(list.begin(), list.end(), b,
                             [](const Incidence& inc, Vertex x) { return inc.neighbor < x; });
  if (it == list.end() || it->neighbor != b) return std::nullopt;
  return it->edge;
}

bool same_skeleton(const SkeletonPtr& a, const SkeletonPtr& b) {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Edge> edges_of(const std::vector<SignedEdge>& signed_edges) {
  std::vector<Edge> out;
  out.reserve(signed_edges.size());
  for (const auto& se : signed_edges) out.push_back(se.edge);
  return out;
}

}  // namespace

SignedGraph::SignedGraph(int vertex_count, const std::vector<SignedEdge>& edges)
    : skeleton_(std::make_shared<const Skeleton>(vertex_count, edges_of(edges))) {
  signs_.resize(skeleton_->edge_count(), Sign::positive);
  for (const auto& se : edges) {
    signs_[*skeleton_->find(se.edge.u, se.edge.v)] = se.sign;
  }
}

SignedGraph::SignedGraph(SkeletonPtr skeleton, std::vector<Sign> signs)
    : skeleton_(std::move(skeleton)), signs_(std::move(signs)) {
  if (!skeleton_) throw InvalidGraphError("null skeleton");
  if (static_cast<int>(signs_.size()) != skeleton_->edge_count()) {
    throw InvalidGraphError("sign vector length does not match edge count");
  }
}

SignedGraph SignedGraph::all_positive(int vertex_count, const std::vector<Edge>& edges) {
  auto sk = std::make_shared<const Skeleton>(vertex_count, edges);
  std::vector<Sign> signs(sk->edge_count(), Sign::positive);
  return SignedGraph(std::move(sk), std::move(signs));
}

SignedGraph SignedGraph::all_negative(int vertex_count, const std::vector<Edge>& edges) {
  auto sk = std::make_shared<const Skeleton>(vertex_count, edges);
  std::vector<Sign> signs(sk->edge_count(), Sign::negative);
  return SignedGraph(std::move(sk), std::move(signs));
}

std::optional<Sign> SignedGraph::sign_of(Vertex a, Vertex b) const {
  auto id = find_edge(a, b);
  if (!id) return std::nullopt;
  return sign(*id);
}

std::vector<EdgeId> SignedGraph::negative_edge_ids() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < edge_count(); ++e) {
    if (is_negative(e)) out.push_back(e);
  }
  return out;
}

EdgeSubset SignedGraph::negative_edges() const {
  std::vector<bool> mask(edge_count());
  for (EdgeId e = 0; e < edge_count(); ++e) mask[e] = is_negative(e);
  return EdgeSubset(skeleton_, std::move(mask));
}

EdgeSubset SignedGraph::positive_edges() const {
  std::vector<bool> mask(edge_count());
  for (EdgeId e = 0; e < edge_count(); ++e) mask[e] = !is_negative(e);
  return EdgeSubset(skeleton_, std::move(mask));
}

EdgeSubset SignedGraph::all_edges() const {
  return EdgeSubset(skeleton_, std::vector<bool>(edge_count(), true));
}

std::vector<SignedEdge> SignedGraph::signed_edges() const {
  std::vector<SignedEdge> out;
  out.reserve(edge_count());
  for (EdgeId e = 0; e < edge_count(); ++e) out.push_back({edge(e), sign(e)});
  return out;
}

// ---------------------------------------------------------------------------

EdgeSubset::EdgeSubset(SkeletonPtr host)
    : host_(std::move(host)), mask_(host_->edge_count(), false) {}

EdgeSubset::EdgeSubset(const SignedGraph& host, std::span<const EdgeId> ids)
    : EdgeSubset(host.skeleton()) {
  for (EdgeId e : ids) {
    if (e < 0 || e >= host.edge_count()) throw InvalidGraphError("edge id out of range");
    insert(e);
  }
}

EdgeSubset::EdgeSubset(const SignedGraph& host, std::span<const Edge> edges)
    : EdgeSubset(host.skeleton()) {
  for (const Edge& e : edges) {
    auto id = host.find_edge(e.u, e.v);
    if (!id) {
      throw InvalidGraphError(std::to_string(e.u) + "-" + std::to_string(e.v) +
                              " is not an edge of the host graph");
    }
    insert(*id);
  }
}

EdgeSubset::EdgeSubset(SkeletonPtr host, std::vector<bool> mask)
    : host_(std::move(host)), mask_(std::move(mask)) {
  if (static_cast<int>(mask_.size()) != host_->edge_count()) {
    throw InvalidGraphError("edge mask length does not match host");
  }
  count_ = static_cast<int>(std::count(mask_.begin(), mask_.end(), true));
}

void EdgeSubset::require_host(const SignedGraph& g, const char* operation) const {
  if (!hosted_by(g)) {
    throw HostMismatchError(std::string(operation) + ": edge subset belongs to another graph");
  }
}

std::vector<EdgeId> EdgeSubset::ids() const {
  std::vector<EdgeId> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i]) out.push_back(static_cast<EdgeId>(i));
  }
  return out;
}

std::vector<Edge> EdgeSubset::edges() const {
  std::vector<Edge> out;
  out.reserve(count_);
  for (EdgeId e : ids()) out.push_back(host_->edge(e));
  return out;
}

void EdgeSubset::insert(EdgeId e) {
  auto i = e;
  if (!mask_[i]) {
    mask_[i] = true;
    ++count_;
  }
}

void EdgeSubset::erase(EdgeId e) {
  auto i = e;
  if (mask_[i]) {
    mask_[i] = false;
    --count_;
  }
}

namespace {

void require_same_host(const EdgeSubset& a, const EdgeSubset& b) {
  if (!same_skeleton(a.host(), b.host())) {
    throw HostMismatchError("edge subsets belong to different graphs");
  }
}

}  // namespace

bool EdgeSubset::intersects(const EdgeSubset& other) const {
  require_same_host(*this, other);
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i] && other.mask_[i]) return true;
  }
  return false;
}

bool EdgeSubset::is_subset_of(const EdgeSubset& other) const {
  require_same_host(*this, other);
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i] && !other.mask_[i]) return false;
  }
  return true;
}

EdgeSubset EdgeSubset::operator|(const EdgeSubset& other) const {
  require_same_host(*this, other);
  std::vector<bool> m(mask_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = mask_[i] || other.mask_[i];
  return EdgeSubset(host_, std::move(m));
}

EdgeSubset EdgeSubset::operator-(const EdgeSubset& other) const {
  require_same_host(*this, other);
  std::vector<bool> m(mask_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = mask_[i] && !other.mask_[i];
  return EdgeSubset(host_, std::move(m));
}

EdgeSubset EdgeSubset::operator^(const EdgeSubset& other) const {
  require_same_host(*this, other);
  std::vector<bool> m(mask_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = mask_[i] != other.mask_[i];
  return EdgeSubset(host_, std::move(m));
}

bool operator<(const EdgeSubset& a, const EdgeSubset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto ea = a.edges();
  auto eb = b.edges();
  return ea < eb;
}

// ---------------------------------------------------------------------------

VertexSubset::VertexSubset(int vertex_count) : mask_(vertex_count) {}

VertexSubset::VertexSubset(int vertex_count, std::span<const Vertex> members)
    : VertexSubset(vertex_count) {
  for (Vertex v : members) insert(v);
}

int VertexSubset::size() const {
  return static_cast<int>(std::count(mask_.begin(), mask_.end(), true));
}

std::vector<Vertex> VertexSubset::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i]) out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

void VertexSubset::insert(Vertex v) {
  if (v < 0 || v >= vertex_count()) {
    throw InvalidGraphError("vertex " + std::to_string(v) + " out of range");
  }
  mask_[v] = true;
}

void VertexSubset::erase(Vertex v) {
  if (v < 0 || v >= vertex_count()) {
    throw InvalidGraphError("vertex " + std::to_string(v) + " out of range");
  }
  mask_[v] = false;
}

void VertexSubset::toggle(Vertex v) {
  if (v < 0 || v >= vertex_count()) {
    throw InvalidGraphError("vertex " + std::to_string(v) + " out of range");
  }
  mask_[v] = !mask_[v];
}

VertexSubset VertexSubset::complement() const {
  VertexSubset out(*this);
  out.mask_.flip();
  return out;
}

VertexSubset VertexSubset::operator^(const VertexSubset& other) const {
  if (other.vertex_count() != vertex_count()) {
    throw HostMismatchError("vertex subsets of different sizes");
  }
  VertexSubset out(vertex_count());
  for (std::size_t i = 0; i < mask_.size(); ++i) out.mask_[i] = mask_[i] != other.mask_[i];
  return out;
}

void VertexSubset::require_host(const SignedGraph& g, const char* operation) const {
  if (vertex_count() != g.vertex_count()) {
    throw HostMismatchError(std::string(operation) + ": vertex subset has " +
                            std::to_string(vertex_count()) + " slots but graph has " +
                            std::to_string(g.vertex_count()) + " vertices");
  }
}

// ---------------------------------------------------------------------------

SignedGraph switch_by(const SignedGraph& g, const VertexSubset& x) {
  x.require_host(g, "switch");
  std::vector<Sign> signs(g.signs().begin(), g.signs().end());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (x.contains(ed.u) != x.contains(ed.v)) {
      signs[e] = -signs[e];
    }
  }
  return SignedGraph(g.skeleton(), std::move(signs));
}

SignedGraph negate_edges(const SignedGraph& g, const EdgeSubset& y) {
  y.require_host(g, "negate_edges");
  std::vector<Sign> signs(g.signs().begin(), g.signs().end());
  for (EdgeId e : y.ids()) {
    signs[e] = -signs[e];
  }
  return SignedGraph(g.skeleton(), std::move(signs));
}

EdgeSubset cut(const SignedGraph& g, const VertexSubset& x) {
  x.require_host(g, "cut");
  EdgeSubset out(g.skeleton());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (x.contains(ed.u) != x.contains(ed.v)) out.insert(e);
  }
  return out;
}

std::vector<EdgeId> cycle_edge_ids(const SignedGraph& g, std::span<const Vertex> cycle) {
  if (cycle.size() < 3) throw InvalidCycleError("a circle needs at least 3 vertices");
  std::vector<bool> seen(g.vertex_count());
  for (Vertex v : cycle) {
    if (!g.valid_vertex(v)) throw InvalidCycleError("vertex " + std::to_string(v) + " out of range");
    if (seen[v]) {
      throw InvalidCycleError("vertex " + std::to_string(v) + " repeated");
    }
    seen[v] = true;
  }
  std::vector<EdgeId> out;
  out.reserve(cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    Vertex a = cycle[i];
    Vertex b = cycle[(i + 1) % cycle.size()];
    auto e = g.find_edge(a, b);
    if (!e) {
      throw InvalidCycleError(std::to_string(a) + "-" + std::to_string(b) + " is not an edge");
    }
    out.push_back(*e);
  }
  return out;
}

Sign circle_sign(const SignedGraph& g, std::span<const Vertex> cycle) {
  Sign s = Sign::positive;
  for (EdgeId e : cycle_edge_ids(g, cycle)) s = s * g.sign(e);
  return s;
}

std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle) {
  if (cycle.size() < 2) return cycle;
  auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

namespace {

SignedGraph keep_sign(const SignedGraph& g, Sign keep) {
  std::vector<SignedEdge> kept;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.sign(e) == keep) kept.push_back({g.edge(e), keep});
  }
  return SignedGraph(g.vertex_count(), kept);
}

}  // namespace

SignedGraph positive_subgraph(const SignedGraph& g) { return keep_sign(g, Sign::positive); }
SignedGraph negative_subgraph(const SignedGraph& g) { return keep_sign(g, Sign::negative); }

Subgraph edge_induced_negative(const SignedGraph& g) {
  std::vector<Vertex> to_host;
  std::vector<int> local(g.vertex_count(), -1);
  for (EdgeId e : g.negative_edge_ids()) {
    for (Vertex v : {g.edge(e).u, g.edge(e).v}) local[v] = 0;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (local[v] == 0) {
      local[v] = static_cast<int>(to_host.size());
      to_host.push_back(v);
    }
  }
  std::vector<SignedEdge> edges;
  for (EdgeId e : g.negative_edge_ids()) {
    edges.push_back({Edge(local[g.edge(e).u],
                          local[g.edge(e).v]),
                     Sign::negative});
  }
  return {SignedGraph(static_cast<int>(to_host.size()), edges), std::move(to_host)};
}

Subgraph induced_subgraph(const SignedGraph& g, std::span<const Vertex> vertices) {
  std::vector<int> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vertex v = vertices[i];
    if (!g.valid_vertex(v)) throw InvalidGraphError("vertex " + std::to_string(v) + " out of range");
    if (local[v] != -1) {
      throw InvalidGraphError("vertex " + std::to_string(v) + " listed twice");
    }
    local[v] = static_cast<int>(i);
  }
  std::vector<SignedEdge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    int a = local[g.edge(e).u];
    int b = local[g.edge(e).v];
    if (a >= 0 && b >= 0) edges.push_back({Edge(a, b), g.sign(e)});
  }
  return {SignedGraph(static_cast<int>(vertices.size()), edges),
          std::vector<Vertex>(vertices.begin(), vertices.end())};
}

CoreResult k_core(const SignedGraph& g, int k) {
  if (k < 0) throw PreconditionError("k_core: k must be nonnegative");
  const int n = g.vertex_count();
  std::vector<int> deg(n);
  std::vector<bool> alive(n, true);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.skeleton()->degree(v);

  CoreResult result;
  while (true) {
    std::vector<Vertex> batch;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v] && deg[v] < k) {
        batch.push_back(v);
      }
    }
    if (batch.empty()) break;
    for (Vertex v : batch) alive[v] = false;
    for (Vertex v : batch) {
      for (const auto& inc : g.incident(v)) {
        if (alive[inc.neighbor]) --deg[inc.neighbor];
      }
    }
    result.peel_batches.push_back(std::move(batch));
  }
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) kept.push_back(v);
  }
  result.core = induced_subgraph(g, kept);
  return result;
}

Degrees degrees(const SignedGraph& g, Vertex v) {
  if (!g.valid_vertex(v)) throw InvalidGraphError("vertex " + std::to_string(v) + " out of range");
  Degrees d;
  for (const auto& inc : g.incident(v)) {
    ++d.total;
    if (g.is_negative(inc.edge)) {
      ++d.negative;
    } else {
      ++d.positive;
    }
  }
  return d;
}

int max_degree(const SignedGraph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.skeleton()->degree(v));
  return best;
}

std::vector<std::vector<Vertex>> connected_components(const SignedGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<Vertex> q;
    q.push(s);
    comp[s] = id;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      out.back().push_back(v);
      for (const auto& inc : g.incident(v)) {
        if (comp[inc.neighbor] == -1) {
          comp[inc.neighbor] = id;
          q.push(inc.neighbor);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const SignedGraph& g) { return connected_components(g).size() <= 1; }

std::vector<std::vector<Vertex>> blocks(const SignedGraph& g) {
  // Iterative Hopcroft-Tarjan with an edge stack.
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<EdgeId> edge_stack;
  std::vector<std::vector<Vertex>> out;
  int timer = 0;

  struct Frame {
    Vertex v;
    EdgeId parent_edge;
    std::size_t next;
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const Incidence& step = inc[f.next++];
        if (step.edge == f.parent_edge) continue;
        auto w = step.neighbor;
        if (disc[w] == -1) {
          edge_stack.push_back(step.edge);
          disc[w] = low[w] = timer++;
          stack.push_back({step.neighbor, step.edge, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(step.edge);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      Vertex parent = stack.back().v;
      auto pv = parent;
      auto dv = done.v;
      low[pv] = std::min(low[pv], low[dv]);
      if (low[dv] >= disc[pv]) {
        std::vector<Vertex> block;
        while (true) {
          EdgeId e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(g.edge(e).u);
          block.push_back(g.edge(e).v);
          if (e == done.parent_edge) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        out.push_back(std::move(block));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<int>> stable_bipartition(const EdgeSubset& edges) {
  const Skeleton& sk = *edges.host();
  const int n = sk.vertex_count();
  std::vector<int> side(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    bool touched = false;
    for (const auto& inc : sk.incident(s)) touched = touched || edges.contains(inc.edge);
    if (!touched) continue;
    side[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (const auto& inc : sk.incident(v)) {
        if (!edges.contains(inc.edge)) continue;
        auto w = inc.neighbor;
        int want = 1 - side[v];
        if (side[w] == -1) {
          side[w] = want;
          q.push(inc.neighbor);
        } else if (side[w] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool is_bipartite(const EdgeSubset& edges) { return stable_bipartition(edges).has_value(); }

bool is_forest(const EdgeSubset& edges) {
  const Skeleton& sk = *edges.host();
  std::vector<int> parent(sk.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (EdgeId e : edges.ids()) {
    int a = find(sk.edge(e).u);
    int b = find(sk.edge(e).v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

std::string to_string(const EdgeSubset& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const Edge& e : s.edges()) {
    if (!first) os << ',';
    first = false;
    os << e.u << '-' << e.v;
  }
  os << '}';
  return os.str();
}

}  // namespace negsets
