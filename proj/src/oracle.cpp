#include "negsets/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "negsets/balance.hpp"

namespace negsets::oracle {

bool SwitchingEnumeration::contains(const EdgeSubset& b) const {
  return b.hosted_by(host) && index.count(b.mask()) > 0;
}

SwitchingEnumeration enumerate_negation_sets(const SignedGraph& g, int max_vertices) {
  const int n = g.vertex_count();
  if (n > max_vertices) {
    throw CapExceededError("oracle enumeration capped at " + std::to_string(max_vertices) +
                           " vertices, graph has " + std::to_string(n));
  }
  if (!is_connected(g)) throw PreconditionError("oracle enumeration requires a connected graph");

  SwitchingEnumeration out{g, {}, {}};
  const int free_vertices = n > 0 ? n - 1 : 0;
  const std::uint64_t total = std::uint64_t{1} << free_vertices;
  const auto m = static_cast<std::size_t>(g.edge_count());
  for (std::uint64_t x = 0; x < total; ++x) {
    std::vector<bool> mask(m);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      bool su = ed.u < free_vertices && ((x >> ed.u) & 1U);
      bool sv = ed.v < free_vertices && ((x >> ed.v) & 1U);
      mask[e] = g.is_negative(e) != (su != sv);
    }
    if (out.index.insert(mask).second) out.negation_sets.emplace_back(g.skeleton(), std::move(mask));
  }
  std::sort(out.negation_sets.begin(), out.negation_sets.end());
  return out;
}

int frustration_index(const SignedGraph& g, int max_vertices) {
  return enumerate_negation_sets(g, max_vertices).negation_sets.front().size();
}

std::vector<EdgeSubset> minimum_negation_sets(const SignedGraph& g, int max_vertices) {
  auto all = enumerate_negation_sets(g, max_vertices).negation_sets;
  const int best = all.front().size();
  std::vector<EdgeSubset> out;
  for (auto& s : all) {
    if (s.size() != best) break;
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

void require_member(const SwitchingEnumeration& all, const EdgeSubset& b, const char* operation) {
  b.require_host(all.host, operation);
  if (!all.contains(b)) {
    throw PreconditionError(std::string(operation) + ": " + to_string(b) +
                            " is not a negation set");
  }
}

}  // namespace

bool brute_is_minimal(const SignedGraph& g, const EdgeSubset& b, int max_vertices) {
  return brute_is_minimal(enumerate_negation_sets(g, max_vertices), b);
}

bool brute_is_minimal(const SwitchingEnumeration& all, const EdgeSubset& b) {
  require_member(all, b, "brute_is_minimal");
  for (const auto& s : all.negation_sets) {
    if (s.size() >= b.size()) break;
    if (s.is_subset_of(b)) return false;
  }
  return true;
}

bool brute_is_unique_minimum(const SignedGraph& g, const EdgeSubset& b, int max_vertices) {
  return brute_is_unique_minimum(enumerate_negation_sets(g, max_vertices), b);
}

bool brute_is_unique_minimum(const SwitchingEnumeration& all, const EdgeSubset& b) {
  require_member(all, b, "brute_is_unique_minimum");
  const auto& sets = all.negation_sets;
  if (sets.front().size() != b.size()) return false;
  return sets.size() == 1 || sets[1].size() > b.size();
}

BrutePacking brute_packing_number(const SignedGraph& g, const EdgeSubset& b, int max_vertices) {
  return brute_packing_number(enumerate_negation_sets(g, max_vertices), b);
}

BrutePacking brute_packing_number(const SwitchingEnumeration& all, const EdgeSubset& b) {
  require_member(all, b, "brute_packing_number");

  std::vector<const EdgeSubset*> candidates;
  for (const auto& s : all.negation_sets) {
    if (!(s == b) && !s.intersects(b)) candidates.push_back(&s);
  }
  const std::size_t k = candidates.size();
  std::vector<std::vector<bool>> compatible(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      compatible[i][j] = compatible[j][i] = !candidates[i]->intersects(*candidates[j]);
    }
  }

  // Maximum clique in the compatibility graph.
  std::vector<std::size_t> best;
  std::vector<std::size_t> current;
  std::function<void(std::vector<std::size_t>&)> grow = [&](std::vector<std::size_t>& pool) {
    if (current.size() > best.size()) best = current;
    while (!pool.empty()) {
      if (current.size() + pool.size() <= best.size()) return;
      std::size_t pick = pool.back();
      pool.pop_back();
      std::vector<std::size_t> next;
      for (std::size_t c : pool) {
        if (compatible[pick][c]) next.push_back(c);
      }
      current.push_back(pick);
      grow(next);
      current.pop_back();
    }
  };
  std::vector<std::size_t> pool(k);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  grow(pool);

  BrutePacking out;
  out.family.push_back(b);
  std::sort(best.begin(), best.end());
  for (std::size_t i : best) out.family.push_back(*candidates[i]);
  out.size = static_cast<int>(out.family.size());
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Edge> cycle_graph(int n) {
  std::vector<Edge> out;
  for (int i = 0; i < n; ++i) out.emplace_back(i, (i + 1) % n);
  return out;
}

std::vector<Edge> complete_graph(int n) {
  std::vector<Edge> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  }
  return out;
}

std::vector<Edge> k4_plus_pendant() {
  auto out = complete_graph(4);
  out.emplace_back(0, 4);
  return out;
}

std::vector<Edge> cube_graph() {
  std::vector<Edge> out;
  for (int v = 0; v < 8; ++v) {
    for (int bit = 0; bit < 3; ++bit) {
      int w = v ^ (1 << bit);
      if (v < w) out.emplace_back(v, w);
    }
  }
  return out;
}

std::vector<SignedGraph> all_signings(int vertex_count, const std::vector<Edge>& edges) {
  if (edges.size() > 20) throw CapExceededError("all_signings: too many edges");
  auto skeleton = std::make_shared<const Skeleton>(vertex_count, edges);
  const std::size_t m = edges.size();
  std::vector<SignedGraph> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    std::vector<Sign> signs(m);
    for (std::size_t e = 0; e < m; ++e) signs[e] = (mask >> e) & 1U ? Sign::negative : Sign::positive;
    out.emplace_back(skeleton, std::move(signs));
  }
  return out;
}

namespace {

Sign random_sign(std::mt19937_64& rng, double negative_probability) {
  return std::bernoulli_distribution(negative_probability)(rng) ? Sign::negative : Sign::positive;
}

}  // namespace

SignedGraph random_connected(std::mt19937_64& rng, int vertex_count,
                             double extra_edge_probability, double negative_probability) {
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> adj(vertex_count, std::vector<bool>(vertex_count));
  for (int v = 1; v < vertex_count; ++v) {
    int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    edges.emplace_back(u, v);
    adj[u][v] = adj[v][u] = true;
  }
  std::bernoulli_distribution extra(extra_edge_probability);
  for (int u = 0; u < vertex_count; ++u) {
    for (int v = u + 1; v < vertex_count; ++v) {
      if (!adj[u][v] && extra(rng)) edges.emplace_back(u, v);
    }
  }
  std::vector<SignedEdge> signed_edges;
  for (const Edge& e : edges) signed_edges.push_back({e, random_sign(rng, negative_probability)});
  return SignedGraph(vertex_count, signed_edges);
}

SignedGraph random_connected_bounded_degree(std::mt19937_64& rng, int vertex_count,
                                            int max_degree, int extra_edge_attempts,
                                            double negative_probability) {
  std::vector<Edge> edges;
  std::vector<int> deg(vertex_count);
  std::vector<std::vector<bool>> adj(vertex_count, std::vector<bool>(vertex_count));
  for (int v = 1; v < vertex_count; ++v) {
    std::vector<int> open;
    for (int u = 0; u < v; ++u) {
      if (deg[u] < max_degree) open.push_back(u);
    }
    int u = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
    edges.emplace_back(u, v);
    adj[u][v] = adj[v][u] = true;
    ++deg[u];
    ++deg[v];
  }
  std::uniform_int_distribution<int> pick(0, vertex_count - 1);
  for (int attempt = 0; attempt < extra_edge_attempts; ++attempt) {
    int u = pick(rng);
    int v = pick(rng);
    if (u == v || adj[u][v] || deg[u] >= max_degree || deg[v] >= max_degree) continue;
    edges.emplace_back(u, v);
    adj[u][v] = adj[v][u] = true;
    ++deg[u];
    ++deg[v];
  }
  std::vector<SignedEdge> signed_edges;
  for (const Edge& e : edges) signed_edges.push_back({e, random_sign(rng, negative_probability)});
  return SignedGraph(vertex_count, signed_edges);
}

SignedGraph random_quartic(std::mt19937_64& rng, int vertex_count, double negative_probability) {
  if (vertex_count < 5) throw PreconditionError("random_quartic: need at least 5 vertices");
  while (true) {
    // Configuration model, rejecting loops, parallel edges and disconnection.
    std::vector<int> stubs;
    for (int v = 0; v < vertex_count; ++v) stubs.insert(stubs.end(), 4, v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<Edge> edges;
    std::vector<std::vector<bool>> adj(vertex_count, std::vector<bool>(vertex_count));
    bool ok = true;
    for (std::size_t i = 0; i < stubs.size() && ok; i += 2) {
      int a = stubs[i];
      int b = stubs[i + 1];
      if (a == b || adj[a][b]) {
        ok = false;
        break;
      }
      adj[a][b] = adj[b][a] = true;
      edges.emplace_back(a, b);
    }
    if (!ok) continue;
    std::vector<SignedEdge> signed_edges;
    for (const Edge& e : edges) signed_edges.push_back({e, random_sign(rng, negative_probability)});
    SignedGraph g(vertex_count, signed_edges);
    if (is_connected(g)) return g;
  }
}

SignedGraph random_complete_signing(std::mt19937_64& rng, int vertex_count, int negative_count) {
  auto edges = complete_graph(vertex_count);
  if (negative_count < 0 || negative_count > static_cast<int>(edges.size())) {
    throw PreconditionError("random_complete_signing: bad negative edge count");
  }
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<SignedEdge> signed_edges;
  for (const Edge& e : edges) signed_edges.push_back({e, Sign::positive});
  for (int i = 0; i < negative_count; ++i) signed_edges[order[i]].sign = Sign::negative;
  return SignedGraph(vertex_count, signed_edges);
}

std::vector<CorpusEntry> standard_corpus(const CorpusOptions& options) {
  std::vector<CorpusEntry> out;
  auto add_all = [&](const std::string& name, int n, const std::vector<Edge>& edges) {
    auto signings = all_signings(n, edges);
    for (std::size_t i = 0; i < signings.size(); ++i) {
      out.push_back({name + "#" + std::to_string(i), std::move(signings[i])});
    }
  };
  for (int n = 3; n <= 6; ++n) add_all("C" + std::to_string(n), n, cycle_graph(n));
  add_all("K4", 4, complete_graph(4));
  if (options.include_k5) add_all("K5", 5, complete_graph(5));
  add_all("K4+pendant", 5, k4_plus_pendant());
  if (options.include_cube) add_all("Q3", 8, cube_graph());

  std::mt19937_64 rng(options.seed);
  for (int i = 0; i < options.random_count; ++i) {
    int n = std::uniform_int_distribution<int>(3, options.random_max_vertices)(rng);
    double density = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
    double negative = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
    out.push_back({"random#" + std::to_string(i), random_connected(rng, n, density, negative)});
  }
  return out;
}

}  // namespace negsets::oracle
