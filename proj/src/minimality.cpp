#include "negsets/minimality.hpp"

#include <algorithm>
#include <stdexcept>

#include "negsets/balance.hpp"

namespace negsets {

bool is_complete(const SignedGraph& g) {
  const long n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

bool is_minimal(const SignedGraph& g, const EdgeSubset& b) {
  if (!is_connected(g)) throw PreconditionError("is_minimal: graph must be connected");
  if (!is_negation_set(g, b)) {
    throw PreconditionError("is_minimal: " + to_string(b) + " is not a negation set");
  }
  std::vector<SignedEdge> rest;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!b.contains(e)) rest.push_back({g.edge(e), g.sign(e)});
  }
  return is_connected(SignedGraph(g.vertex_count(), rest));
}

namespace {

std::vector<EdgeId> checked_circle(const SignedGraph& g, const std::vector<Vertex>& circle) {
  try {
    return cycle_edge_ids(g, circle);
  } catch (const InvalidCycleError& e) {
    throw MalformedCertificateError(std::string("certificate circle: ") + e.what());
  }
}

Sign sign_of_edges(const SignedGraph& g, const std::vector<EdgeId>& ids) {
  Sign s = Sign::positive;
  for (EdgeId e : ids) s = s * g.sign(e);
  return s;
}

void require_negative_set(const SignedGraph& g, const EdgeSubset& b, const char* operation) {
  b.require_host(g, operation);
  if (!(b == g.negative_edges())) {
    throw PreconditionError(std::string(operation) + ": b must be the negative edge set");
  }
}

}  // namespace

bool verify_disjoint_circle_certificate(const SignedGraph& g, const EdgeSubset& b,
                                        const DisjointCircleCertificate& cert) {
  if (!is_negation_set(g, b)) {
    throw PreconditionError("verify_disjoint_circle_certificate: b is not a negation set");
  }
  std::vector<std::vector<EdgeId>> circles;
  for (const auto& c : cert.circles) circles.push_back(checked_circle(g, c));

  if (static_cast<int>(circles.size()) != b.size()) return false;
  std::vector<bool> used(static_cast<std::size_t>(g.edge_count()));
  for (const auto& ids : circles) {
    if (sign_of_edges(g, ids) != Sign::negative) return false;
    for (EdgeId e : ids) {
      if (used[e]) return false;
      used[e] = true;
    }
  }
  return true;
}

std::vector<int> proper_edge_coloring(const EdgeSubset& edges) {
  const Skeleton& sk = *edges.host();
  const int n = sk.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(sk.edge_count()), -1);

  int delta = 0;
  std::vector<std::vector<Incidence>> adj(n);
  for (EdgeId e : edges.ids()) {
    adj[sk.edge(e).u].push_back({sk.edge(e).v, e});
    adj[sk.edge(e).v].push_back({sk.edge(e).u, e});
  }
  for (const auto& list : adj) delta = std::max(delta, static_cast<int>(list.size()));
  const int palette = delta + 1;
  // at[x][c]: the edge of color c at x, or -1.
  std::vector<std::vector<EdgeId>> at(n, std::vector<EdgeId>(palette, -1));

  auto is_free = [&](Vertex x, int c) { return at[x][c] == -1; };
  auto first_free = [&](Vertex x) {
    for (int c = 0; c < palette; ++c) {
      if (is_free(x, c)) return c;
    }
    return -1;
  };
  auto set_color = [&](EdgeId e, int c) {
    const Edge& ed = sk.edge(e);
    if (color[e] >= 0) {
      at[ed.u][color[e]] = -1;
      at[ed.v][color[e]] = -1;
    }
    color[e] = c;
    if (c >= 0) {
      at[ed.u][c] = e;
      at[ed.v][c] = e;
    }
  };

  for (EdgeId uv : edges.ids()) {
    const Vertex u = sk.edge(uv).u;
    const Vertex v = sk.edge(uv).v;

    // Maximal fan of u starting at v.
    std::vector<Vertex> fan{v};
    std::vector<EdgeId> fan_edge{uv};
    std::vector<bool> in_fan(n);
    in_fan[v] = true;
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& inc : adj[u]) {
        if (in_fan[inc.neighbor] || color[inc.edge] < 0) continue;
        if (is_free(fan.back(), color[inc.edge])) {
          fan.push_back(inc.neighbor);
          fan_edge.push_back(inc.edge);
          in_fan[inc.neighbor] = true;
          grew = true;
          break;
        }
      }
    }

    const int c = first_free(u);
    const int d = first_free(fan.back());

    // Invert the cd-path from u (it starts with a d-colored edge).
    if (c != d) {
      std::vector<EdgeId> path;
      Vertex x = u;
      int want = d;
      while (at[x][want] != -1) {
        EdgeId e = at[x][want];
        path.push_back(e);
        x = sk.edge(e).other(x);
        want = want == d ? c : d;
      }
      for (EdgeId e : path) set_color(e, -1);
      for (std::size_t i = 0; i < path.size(); ++i) {
        // Path edge i had color d for even i, c for odd i.
        set_color(path[i], i % 2 == 0 ? c : d);
      }
    }

    // First fan vertex w with d free such that fan[0..w] is still a fan.
    std::size_t w = fan.size();
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (i > 0) {
        int ci = color[fan_edge[i]];
        if (ci < 0 || !is_free(fan[i - 1], ci)) break;
      }
      if (is_free(fan[i], d)) {
        w = i;
        break;
      }
    }
    if (w == fan.size()) throw std::logic_error("edge coloring: no rotatable fan prefix");
    // Rotate the prefix fan[0..w] and color (u, fan[w]) with d.
    for (std::size_t i = 0; i < w; ++i) {
      int next = color[fan_edge[i + 1]];
      set_color(fan_edge[i + 1], -1);
      set_color(fan_edge[i], next);
    }
    set_color(fan_edge[w], d);
  }
  return color;
}

std::optional<DisjointCircleCertificate> triangle_certificate_for_complete(const SignedGraph& g,
                                                                           const EdgeSubset& b) {
  if (!is_complete(g)) {
    throw PreconditionError("triangle_certificate_for_complete: underlying graph is not complete");
  }
  require_negative_set(g, b, "triangle_certificate_for_complete");

  auto color = proper_edge_coloring(b);
  std::vector<int> used_colors;
  for (EdgeId e : b.ids()) used_colors.push_back(color[e]);
  std::sort(used_colors.begin(), used_colors.end());
  used_colors.erase(std::unique(used_colors.begin(), used_colors.end()), used_colors.end());

  std::vector<bool> touched(static_cast<std::size_t>(g.vertex_count()));
  for (const Edge& e : b.edges()) touched[e.u] = touched[e.v] = true;
  std::vector<Vertex> spare;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!touched[v]) spare.push_back(v);
  }
  if (spare.size() < used_colors.size()) return std::nullopt;

  DisjointCircleCertificate cert;
  for (EdgeId e : b.ids()) {
    auto rank = std::lower_bound(used_colors.begin(), used_colors.end(), color[e]) -
                used_colors.begin();
    Vertex apex = spare[static_cast<std::size_t>(rank)];
    cert.circles.push_back(canonical_cycle({g.edge(e).u, g.edge(e).v, apex}));
  }
  return cert;
}

bool verify_two_circle_certificate(const SignedGraph& g, const EdgeSubset& b,
                                   const TwoCirclePerEdgeCertificate& cert) {
  require_negative_set(g, b, "verify_two_circle_certificate");

  std::vector<bool> covered(static_cast<std::size_t>(g.edge_count()));
  std::vector<bool> used(static_cast<std::size_t>(g.edge_count()));
  bool ok = true;
  for (const auto& pair : cert.pairs) {
    auto first = checked_circle(g, pair.first);
    auto second = checked_circle(g, pair.second);
    auto id = g.find_edge(pair.edge.u, pair.edge.v);
    if (!id) throw MalformedCertificateError("certificate edge is not an edge of the graph");
    if (!b.contains(*id) || covered[*id]) {
      ok = false;
      continue;
    }
    covered[*id] = true;

    auto has = [&](const std::vector<EdgeId>& ids, EdgeId e) {
      return std::find(ids.begin(), ids.end(), e) != ids.end();
    };
    if (!has(first, *id) || !has(second, *id)) ok = false;
    if (sign_of_edges(g, first) != Sign::negative || sign_of_edges(g, second) != Sign::negative) {
      ok = false;
    }
    // The two circles may share only the edge itself.
    for (EdgeId e : first) {
      if (e != *id && has(second, e)) ok = false;
    }
    std::vector<EdgeId> together = first;
    together.insert(together.end(), second.begin(), second.end());
    std::sort(together.begin(), together.end());
    together.erase(std::unique(together.begin(), together.end()), together.end());
    for (EdgeId e : together) {
      if (used[e]) ok = false;
      used[e] = true;
    }
  }
  for (EdgeId e : b.ids()) {
    if (!covered[e]) ok = false;
  }
  return ok;
}

bool unique_minimum_by_size(const SignedGraph& g, const EdgeSubset& b) {
  if (!is_complete(g)) {
    throw PreconditionError("unique_minimum_by_size: underlying graph is not complete");
  }
  require_negative_set(g, b, "unique_minimum_by_size");
  // |b| <= n/2 - 1  <=>  2|b| <= n - 2
  return 2 * b.size() <= g.vertex_count() - 2;
}

}  // namespace negsets
