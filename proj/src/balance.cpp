#include "negsets/balance.hpp"

#include <algorithm>
#include <queue>

namespace negsets {

VertexSubset HararyBipartition::y_side() const {
  VertexSubset out(static_cast<int>(side.size()));
  for (std::size_t v = 0; v < side.size(); ++v) {
    if (side[v] == 1) out.insert(static_cast<Vertex>(v));
  }
  return out;
}

BalanceWitness check_balance(const SignedGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::vector<int> depth(n, 0);

  for (Vertex root = 0; root < n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (const auto& inc : g.incident(v)) {
        Vertex w = inc.neighbor;
        int want = g.is_negative(inc.edge) ? 1 - side[v] : side[v];
        if (side[w] == -1) {
          side[w] = want;
          parent[w] = v;
          depth[w] = depth[v] + 1;
          q.push(w);
          continue;
        }
        if (side[w] == want) continue;

        // Conflict: tree paths from v and w to their lowest common ancestor
        // plus the edge vw close a negative circle.
        std::vector<Vertex> up_v{v};
        std::vector<Vertex> up_w{w};
        Vertex a = v;
        Vertex b = w;
        while (depth[a] > depth[b]) up_v.push_back(a = parent[a]);
        while (depth[b] > depth[a]) up_w.push_back(b = parent[b]);
        while (a != b) {
          up_v.push_back(a = parent[a]);
          up_w.push_back(b = parent[b]);
        }
        up_w.pop_back();  // the common ancestor is already in up_v
        std::vector<Vertex> cycle(up_v.rbegin(), up_v.rend());
        cycle.insert(cycle.end(), up_w.begin(), up_w.end());
        return {std::nullopt, canonical_cycle(std::move(cycle))};
      }
    }
  }
  return {HararyBipartition{std::move(side)}, {}};
}

bool is_balanced(const SignedGraph& g) { return check_balance(g).balanced(); }

bool is_negation_set(const SignedGraph& g, const EdgeSubset& b) {
  b.require_host(g, "is_negation_set");
  return is_balanced(negate_edges(g, b));
}

EdgeSubset negation_set_from_switching(const SignedGraph& g, const VertexSubset& x) {
  return switch_by(g, x).negative_edges();
}

std::optional<VertexSubset> antibalancing_switch(const SignedGraph& g) {
  // g^X is all negative iff (-g)^X is all positive iff X is one side of a
  // Harary bipartition of -g.
  auto witness = check_balance(negate_edges(g, g.all_edges()));
  if (!witness.balanced()) return std::nullopt;
  return witness.bipartition->y_side();
}

bool is_antibalanced(const SignedGraph& g) { return antibalancing_switch(g).has_value(); }

bool switching_equivalent(const SignedGraph& g1, const SignedGraph& g2) {
  if (!g1.same_underlying(g2)) return false;
  std::vector<Sign> disagreement(static_cast<std::size_t>(g1.edge_count()));
  for (EdgeId e = 0; e < g1.edge_count(); ++e) {
    disagreement[e] = g1.sign(e) == g2.sign(e) ? Sign::positive : Sign::negative;
  }
  return is_balanced(SignedGraph(g1.skeleton(), std::move(disagreement)));
}

std::optional<std::vector<int>> multigraph_harary_sides(int vertex_count,
                                                        std::span<const MultiEdge> edges) {
  std::vector<std::vector<std::pair<int, Sign>>> adj(vertex_count);
  for (const auto& e : edges) {
    if (e.a < 0 || e.b < 0 || e.a >= vertex_count || e.b >= vertex_count) {
      throw InvalidGraphError("multigraph edge out of range");
    }
    adj[e.a].push_back({e.b, e.sign});
    adj[e.b].push_back({e.a, e.sign});
  }
  std::vector<int> side(vertex_count, -1);
  for (int root = 0; root < vertex_count; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto [w, s] : adj[v]) {
        int want = s == Sign::negative ? 1 - side[v] : side[v];
        if (side[w] == -1) {
          side[w] = want;
          q.push(w);
        } else if (side[w] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

}  // namespace negsets
