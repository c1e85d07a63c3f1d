#include "negsets/negation.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "negsets/balance.hpp"

namespace negsets {

namespace {

using Cycle = std::vector<Vertex>;

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

// Mutable signing of a fixed skeleton. Tracks the accumulated switching.
class WorkingSigning {
 public:
  explicit WorkingSigning(const SignedGraph& g)
      : skeleton_(g.skeleton()),
        signs_(g.signs().begin(), g.signs().end()),
        switched_(g.vertex_count()) {}

  int vertex_count() const { return skeleton_->vertex_count(); }
  std::span<const Incidence> incident(Vertex v) const { return skeleton_->incident(v); }
  bool negative(EdgeId e) const { return signs_[e] == Sign::negative; }
  bool adjacent(Vertex a, Vertex b) const { return skeleton_->find(a, b).has_value(); }
  bool negatively_adjacent(Vertex a, Vertex b) const {
    auto e = skeleton_->find(a, b);
    return e && negative(*e);
  }

  int negative_degree(Vertex v) const {
    int d = 0;
    for (const auto& inc : incident(v)) d += negative(inc.edge);
    return d;
  }
  int positive_degree(Vertex v) const { return skeleton_->degree(v) - negative_degree(v); }

  std::vector<Vertex> positive_neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (const auto& inc : incident(v))
      if (!negative(inc.edge)) out.push_back(inc.neighbor);
    return out;
  }

  void switch_vertices(const std::vector<Vertex>& xs) {
    std::vector<bool> in(vertex_count());
    for (Vertex x : xs) in[x] = true;
    for (Vertex x : xs) {
      switched_.toggle(x);
      for (const auto& inc : incident(x))
        if (!in[inc.neighbor]) signs_[inc.edge] = -signs_[inc.edge];
    }
  }

  const VertexSubset& switched() const { return switched_; }
  SignedGraph snapshot() const { return SignedGraph(skeleton_, signs_); }

  // Component representative per vertex in the negative subgraph.
  std::vector<int> negative_components() const {
    UnionFind uf(vertex_count());
    for (EdgeId e = 0; e < skeleton_->edge_count(); ++e)
      if (negative(e)) uf.unite(skeleton_->edge(e).u, skeleton_->edge(e).v);
    std::vector<int> comp(vertex_count());
    for (Vertex v = 0; v < vertex_count(); ++v) comp[v] = uf.find(v);
    return comp;
  }

  // Shortest negative path from a to b, ties broken toward smaller vertices.
  std::optional<std::vector<Vertex>> negative_path(Vertex a, Vertex b,
                                                   const std::vector<bool>* blocked = nullptr) const {
    std::vector<Vertex> parent(vertex_count(), -1);
    std::deque<Vertex> queue{a};
    parent[a] = a;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      if (x == b) break;
      for (const auto& inc : incident(x)) {
        if (!negative(inc.edge) || parent[inc.neighbor] != -1) continue;
        if (blocked && (*blocked)[inc.neighbor] && inc.neighbor != b) continue;
        parent[inc.neighbor] = x;
        queue.push_back(inc.neighbor);
      }
    }
    if (parent[b] == -1) return std::nullopt;
    std::vector<Vertex> path{b};
    while (path.back() != a) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
  }

  // Every negative degree at most 2 and no vertex with d+ <= 1 and d- >= 2.
  std::optional<Vertex> normalization_candidate() const {
    for (Vertex v = 0; v < vertex_count(); ++v) {
      int dn = negative_degree(v);
      if (dn >= 3 || (dn >= 2 && skeleton_->degree(v) - dn <= 1)) return v;
    }
    return std::nullopt;
  }

  // Cycle components of the negative subgraph; valid when every negative
  // degree is at most 2. Sorted by their sorted vertex tuple.
  std::vector<Cycle> circles() const {
    std::vector<bool> seen(vertex_count());
    std::vector<std::pair<std::vector<Vertex>, Cycle>> found;
    for (Vertex s = 0; s < vertex_count(); ++s) {
      if (seen[s] || negative_degree(s) != 2) continue;
      // Walk the component; it is a cycle iff every vertex has degree 2.
      Cycle walk{s};
      seen[s] = true;
      bool closed = true;
      Vertex prev = -1, cur = s;
      while (true) {
        std::vector<Vertex> next;
        for (const auto& inc : incident(cur))
          if (negative(inc.edge)) next.push_back(inc.neighbor);
        if (next.size() != 2) {
          closed = false;
          break;
        }
        Vertex nxt = (prev == -1) ? std::min(next[0], next[1]) : (next[0] == prev ? next[1] : next[0]);
        if (nxt == s) break;
        if (seen[nxt]) {
          closed = false;
          break;
        }
        seen[nxt] = true;
        walk.push_back(nxt);
        prev = cur;
        cur = nxt;
      }
      if (!closed) {
        mark_component(s, seen);
        continue;
      }
      std::vector<Vertex> key = walk;
      std::sort(key.begin(), key.end());
      found.emplace_back(std::move(key), canonical_cycle(walk));
    }
    std::sort(found.begin(), found.end());
    std::vector<Cycle> out;
    for (auto& f : found) out.push_back(std::move(f.second));
    return out;
  }

  int circle_count() const { return static_cast<int>(circles().size()); }

  std::optional<Cycle> circle_containing(Vertex v) const {
    for (auto& c : circles())
      if (std::find(c.begin(), c.end(), v) != c.end()) return c;
    return std::nullopt;
  }

 private:
  void mark_component(Vertex s, std::vector<bool>& seen) const {
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (const auto& inc : incident(x))
        if (negative(inc.edge) && !seen[inc.neighbor]) {
          seen[inc.neighbor] = true;
          stack.push_back(inc.neighbor);
        }
    }
  }

  SkeletonPtr skeleton_;
  std::vector<Sign> signs_;
  VertexSubset switched_;
};

bool consecutive(const Cycle& c, Vertex a, Vertex b) {
  const auto n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    Vertex x = c[i], y = c[(i + 1) % n];
    if ((x == a && y == b) || (x == b && y == a)) return true;
  }
  return false;
}

bool on_cycle(const Cycle& c, Vertex v) { return std::find(c.begin(), c.end(), v) != c.end(); }

struct Action {
  int step = 0;
  std::vector<Vertex> vertices;
};

struct Walk {
  Vertex v1 = -1;
  Vertex v2 = -1;
  std::vector<Vertex> path;
  Cycle current;
};

// Runs the main loop on one block of the 4-core.
class BlockReducer {
 public:
  BlockReducer(const Subgraph& block, int& iterations, int budget, AcyclicStats& stats,
               std::vector<StepRecord>& trace)
      : block_(block),
        work_(block.graph),
        iterations_(iterations),
        budget_(budget),
        stats_(stats),
        trace_(trace) {}

  // Returns the block-local switching, or the host vertices of a -K5 block.
  std::variant<VertexSubset, MinusK5Exception> run() {
    int step = 2;
    Cycle c;
    std::optional<Walk> walk;
    std::optional<int> committed;
    bool pending_progress = false;

    while (true) {
      if (++iterations_ > budget_)
        throw BudgetExceededError("acyclic negation exceeded its iteration budget of " +
                                  std::to_string(budget_));
      if (step == 2) {
        while (auto v = work_.normalization_candidate()) apply({3, {*v}}, "normalize");
        int count = work_.circle_count();
        stats_.circle_counts.push_back(count);
        if (pending_progress && committed && count >= *committed) ++stats_.progress_violations;
        if (!committed || pending_progress) committed = count;
        pending_progress = false;
        walk.reset();
        if (count == 0) return work_.switched();
        c = work_.circles().front();
        step = 3;
        continue;
      }
      if (step == 3) {
        auto action = evaluate(c, step);
        step = 14;
        if (!action) continue;
        if (action->step != 10) {
          apply(*action);
          pending_progress = true;
          step = 2;
          continue;
        }
        // Steps 10 to 12.
        const auto& q = action->vertices;
        Vertex v1 = q[0], v2 = q[1], v3 = q[2], v4 = q[3];
        apply({10, {v1, v2, v4}});
        std::vector<Vertex> outer;
        for (Vertex t : {v1, v2, v3}) {
          std::vector<Vertex> rest;
          for (Vertex p : work_.positive_neighbors(t))
            if (p != v1 && p != v2 && p != v3 && p != v4) rest.push_back(p);
          if (rest.size() != 1) break;
          outer.push_back(rest.front());
        }
        if (outer.size() != 3) {
          step = 2;
          continue;
        }
        if (outer[0] == outer[1] && outer[1] == outer[2]) {
          Vertex v5 = outer[0];
          if (work_.adjacent(v4, v5)) {
            std::vector<Vertex> k5;
            for (Vertex x : {v1, v2, v3, v4, v5}) k5.push_back(block_.to_host[x]);
            std::sort(k5.begin(), k5.end());
            return MinusK5Exception{k5, 11};
          }
          apply({11, {v2, v3, v4, v5}});
          pending_progress = true;
          step = 2;
          continue;
        }
        // Step 12. Steps 3 to 7 are rechecked on the triangle before step 8.
        c = canonical_cycle({v1, v2, v3});
        step = 3;
        continue;
      }
      // Step 14.
      if (work_.normalization_candidate()) {
        step = 2;
        continue;
      }
      bool redirected = false;
      for (const auto& d : work_.circles()) {
        if (d == c) continue;
        if (evaluate(d, 3)) {
          c = d;
          redirected = true;
          break;
        }
      }
      if (redirected) {
        step = 3;
        continue;
      }
      if (walk && walk->current == c) {
        if (!advance(*walk, c)) {
          pending_progress = true;
          step = 2;
          walk.reset();
        } else {
          step = 3;
        }
        continue;
      }
      walk = start_walk(c);
      if (!walk) throw std::logic_error("acyclic negation: no walk from circle " + describe(c));
      c = walk->current;
      step = 3;
    }
  }

 private:
  void apply(const Action& a, const std::string& note = {}) {
    work_.switch_vertices(a.vertices);
    StepRecord r;
    r.step = a.step;
    for (Vertex v : a.vertices) r.switched.push_back(block_.to_host[v]);
    std::sort(r.switched.begin(), r.switched.end());
    r.note = note;
    trace_.push_back(std::move(r));
  }

  std::string describe(const Cycle& c) const {
    std::string s;
    for (Vertex v : c) s += (s.empty() ? "" : " ") + std::to_string(block_.to_host[v]);
    return "(" + s + ")";
  }

  // First applicable step among `start`..13 for circle `c`, without switching.
  // A returned step 10 carries (v1, v2, v3, v4).
  std::optional<Action> evaluate(const Cycle& c, int start) const {
    Cycle sorted = c;
    std::sort(sorted.begin(), sorted.end());
    std::vector<bool> on(work_.vertex_count());
    for (Vertex v : c) on[v] = true;

    if (start <= 3) {
      for (Vertex v : sorted)
        if (work_.positive_degree(v) <= 1) return Action{3, {v}};
      for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
          if (work_.adjacent(sorted[i], sorted[j]) && !consecutive(c, sorted[i], sorted[j]))
            return Action{4, {sorted[i], sorted[j]}};
      auto comp = work_.negative_components();
      for (Vertex v : sorted) {
        auto p = work_.positive_neighbors(v);
        if (p.size() == 2 && comp[p[0]] != comp[p[1]]) return Action{5, {v}};
      }
      std::set<Vertex> outside;
      for (Vertex v : sorted)
        for (Vertex p : work_.positive_neighbors(v))
          if (!on[p]) outside.insert(p);
      for (Vertex x : outside) {
        int dn = work_.negative_degree(x);
        if (dn == 1) continue;
        Vertex v = -1;
        for (Vertex y : sorted)
          if (work_.adjacent(x, y)) {
            v = y;
            break;
          }
        if (dn == 0) return Action{7, {v}};
        return Action{7, {x, v}};
      }
    }

    std::vector<std::vector<Vertex>> pos(work_.vertex_count());
    for (Vertex v : sorted) pos[v] = work_.positive_neighbors(v);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      for (std::size_t j = i + 1; j < sorted.size(); ++j) {
        Vertex a = sorted[i], b = sorted[j];
        if (pos[a].size() != 2 || pos[b].size() != 2) continue;
        int shared = 0;
        for (Vertex p : pos[a]) shared += std::count(pos[b].begin(), pos[b].end(), p);
        if (shared != 1) continue;
        for (Vertex v : {a, b}) {
          auto path = work_.negative_path(pos[v][0], pos[v][1]);
          if (!path) continue;
          std::sort(path->begin(), path->end());
          for (Vertex w : *path)
            if (work_.negative_degree(w) >= 3) return Action{8, {v, w}};
        }
      }
    }
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      for (std::size_t j = i + 1; j < sorted.size(); ++j) {
        Vertex v1 = sorted[i], v2 = sorted[j];
        if (pos[v1].size() != 2 || pos[v1] != pos[v2]) continue;
        Vertex v3 = pos[v1][0], v4 = pos[v1][1];
        if (!work_.negatively_adjacent(v3, v4)) return Action{9, {v1, v2, v3, v4}};
        if (consecutive(c, v1, v2)) return Action{10, {v1, v2, v3, v4}};
        return Action{13, {v1, v2, v3}};
      }
    }
    return std::nullopt;
  }

  // Picks v1, v2 on `c` and a shortest path outside c between the negative
  // paths closing their circles, then switches v1.
  std::optional<Walk> start_walk(const Cycle& c) {
    std::vector<bool> on(work_.vertex_count());
    for (Vertex v : c) on[v] = true;
    auto comp = work_.negative_components();
    Cycle sorted = c;
    std::sort(sorted.begin(), sorted.end());

    std::optional<std::tuple<std::size_t, bool, Vertex, Vertex>> best_key;
    Walk best;
    for (Vertex a : sorted) {
      auto pa = work_.positive_neighbors(a);
      if (pa.size() != 2 || comp[pa[0]] != comp[pa[1]]) continue;
      for (Vertex b : sorted) {
        if (a == b) continue;
        auto pb = work_.positive_neighbors(b);
        if (pb.size() != 2 || comp[pb[0]] != comp[pb[1]]) continue;
        if (comp[pa[0]] == comp[pb[0]]) continue;
        auto path = shortest_between(comp, comp[pa[0]], comp[pb[0]], on);
        if (!path) continue;
        std::tuple<std::size_t, bool, Vertex, Vertex> key{path->size(), work_.adjacent(a, b), a, b};
        if (!best_key || key < *best_key) {
          best_key = key;
          best = Walk{a, b, *path, {}};
        }
      }
    }
    if (!best_key) return std::nullopt;
    apply({14, {best.v1}}, "walk start");
    auto d = work_.circle_containing(best.v1);
    if (!d) return std::nullopt;
    best.current = *d;
    return best;
  }

  // Multi-source BFS avoiding `blocked`, from the vertices of negative
  // component `from` to those of `to`.
  std::optional<std::vector<Vertex>> shortest_between(const std::vector<int>& comp, int from, int to,
                                                      const std::vector<bool>& blocked) const {
    const int n = work_.vertex_count();
    std::vector<Vertex> parent(n, -1);
    std::deque<Vertex> queue;
    for (Vertex v = 0; v < n; ++v)
      if (comp[v] == from && !blocked[v]) {
        parent[v] = v;
        queue.push_back(v);
      }
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      if (comp[x] == to) {
        std::vector<Vertex> path{x};
        while (parent[path.back()] != path.back()) path.push_back(parent[path.back()]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      for (const auto& inc : work_.incident(x)) {
        Vertex y = inc.neighbor;
        if (blocked[y] || parent[y] != -1) continue;
        parent[y] = x;
        queue.push_back(y);
      }
    }
    return std::nullopt;
  }

  // One move of the walk. Returns false when the walk finished with its
  // closing switch or could not continue.
  bool advance(Walk& w, Cycle& c) {
    const auto& path = w.path;
    const int last = static_cast<int>(path.size()) - 1;
    Vertex wn = path[last];
    for (Vertex u : c) {
      if (u == wn) return false;
      auto e = work_.adjacent(u, wn) && !work_.negatively_adjacent(u, wn);
      if (e) {
        apply({14, {w.v2, u, wn}}, "walk end");
        return false;
      }
    }
    int i = -1;
    for (int k = 0; k <= last; ++k)
      if (on_cycle(c, path[k])) i = k;
    if (i < 0 || i >= last) return false;
    apply({14, {path[i]}}, "walk");
    auto d = work_.circle_containing(path[i]);
    if (!d || !on_cycle(*d, path[i + 1])) return false;
    w.current = *d;
    c = *d;
    return true;
  }

  const Subgraph& block_;
  WorkingSigning work_;
  int& iterations_;
  int budget_;
  AcyclicStats& stats_;
  std::vector<StepRecord>& trace_;
};

bool is_minus_k5(const SignedGraph& block) {
  if (block.vertex_count() != 5 || block.edge_count() != 10) return false;
  std::vector<Edge> edges(block.edges().begin(), block.edges().end());
  return switching_equivalent(block, SignedGraph::all_negative(5, edges));
}

}  // namespace

AcyclicOutcome acyclic_negation(const SignedGraph& g) {
  if (!is_connected(g))
    throw PreconditionError("acyclic_negation requires a connected graph; run it per component");
  const int n = g.vertex_count();
  const long budget_long = 10L * std::max(1, n) * std::max(1, g.edge_count());
  const int budget = static_cast<int>(std::min<long>(budget_long, 1L << 30));

  AcyclicNegationResult result{VertexSubset(n), g.negative_edges(), {}, {}};
  auto core = k_core(g, 4);
  const auto& cg = core.core.graph;
  const auto& to_host = core.core.to_host;
  if (cg.vertex_count() > 0 && max_degree(cg) > 4)
    throw PreconditionError("acyclic_negation requires the 4-core to have maximum degree at most 4");
  if (cg.vertex_count() > 0) {
    std::vector<Vertex> host_core(to_host);
    result.trace.push_back({1, {}, "4-core on " + std::to_string(cg.vertex_count()) + " vertices"});
  }

  auto core_blocks = blocks(cg);
  for (const auto& b : core_blocks) {
    auto sub = induced_subgraph(cg, b);
    if (is_minus_k5(sub.graph)) {
      std::vector<Vertex> host;
      for (Vertex v : b) host.push_back(to_host[v]);
      std::sort(host.begin(), host.end());
      return MinusK5Exception{host, 1};
    }
  }

  // Preprocessing on the whole core.
  WorkingSigning core_work(cg);
  while (true) {
    std::optional<Vertex> hit;
    for (Vertex v = 0; v < cg.vertex_count(); ++v)
      if (core_work.negative_degree(v) >= 3) {
        hit = v;
        break;
      }
    if (!hit) break;
    core_work.switch_vertices({*hit});
    result.trace.push_back({2, {to_host[*hit]}, "preprocess"});
  }
  SignedGraph pre = core_work.snapshot();

  // Main loop per block; block switchings are aligned at shared cut vertices.
  VertexSubset core_switch = core_work.switched();
  std::vector<int> assigned(cg.vertex_count(), -1);
  std::vector<bool> done(core_blocks.size());
  for (std::size_t processed = 0; processed < core_blocks.size(); ++processed) {
    std::size_t pick = core_blocks.size();
    for (std::size_t i = 0; i < core_blocks.size() && pick == core_blocks.size(); ++i) {
      if (done[i]) continue;
      for (Vertex v : core_blocks[i])
        if (assigned[v] != -1) {
          pick = i;
          break;
        }
    }
    if (pick == core_blocks.size())
      for (std::size_t i = 0; i < core_blocks.size(); ++i)
        if (!done[i]) {
          pick = i;
          break;
        }
    done[pick] = true;
    const auto& bv = core_blocks[pick];
    auto sub = induced_subgraph(pre, bv);
    std::vector<Vertex> host_map;
    for (Vertex v : sub.to_host) host_map.push_back(to_host[v]);
    Subgraph hosted{sub.graph, host_map};

    BlockReducer reducer(hosted, result.stats.iterations, budget, result.stats, result.trace);
    auto out = reducer.run();
    if (auto* k5 = std::get_if<MinusK5Exception>(&out)) return *k5;
    const auto& local = std::get<VertexSubset>(out);

    std::optional<bool> flip;
    for (std::size_t i = 0; i < bv.size(); ++i) {
      if (assigned[bv[i]] == -1) continue;
      bool want = (assigned[bv[i]] == 1) != local.contains(static_cast<Vertex>(i));
      if (flip && *flip != want) throw std::logic_error("acyclic negation: blocks share two vertices");
      flip = want;
    }
    for (std::size_t i = 0; i < bv.size(); ++i) {
      bool in = local.contains(static_cast<Vertex>(i)) != flip.value_or(false);
      assigned[bv[i]] = in ? 1 : 0;
    }
  }
  for (Vertex v = 0; v < cg.vertex_count(); ++v)
    if (assigned[v] == 1) core_switch.toggle(v);

  VertexSubset host_switch(n);
  for (Vertex v = 0; v < cg.vertex_count(); ++v)
    if (core_switch.contains(v)) host_switch.insert(to_host[v]);

  if (!is_forest(switch_by(cg, core_switch).negative_edges()))
    throw std::logic_error("acyclic negation left a fully negative circle in the 4-core");

  // Step 15: re-add peeled batches, last removed first.
  WorkingSigning host_work(switch_by(g, host_switch));
  std::vector<bool> present(n);
  for (Vertex v : to_host) present[v] = true;
  auto present_negative_degree = [&](Vertex v) {
    int d = 0;
    for (const auto& inc : g.incident(v))
      if (present[inc.neighbor] && host_work.negative(inc.edge)) ++d;
    return d;
  };
  for (auto batch = core.peel_batches.rbegin(); batch != core.peel_batches.rend(); ++batch) {
    for (Vertex v : *batch) present[v] = true;
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v : *batch) {
        if (present_negative_degree(v) >= 2) {
          host_work.switch_vertices({v});
          host_switch.toggle(v);
          result.trace.push_back({15, {v}, "reattach"});
          changed = true;
        }
      }
    }
  }

  result.switching = host_switch;
  result.negation_set = switch_by(g, host_switch).negative_edges();
  if (!is_forest(result.negation_set) || !is_negation_set(g, result.negation_set))
    throw std::logic_error("acyclic negation produced an invalid result");
  return result;
}

EdgeSubset disjoint_partner(const SignedGraph& g) {
  auto sides = stable_bipartition(g.negative_edges());
  if (!sides) throw PreconditionError("disjoint_partner: the negative edges contain an odd circle");
  auto side = *sides;
  std::deque<Vertex> queue;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (side[v] != -1) queue.push_back(v);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (side[s] == -1 && queue.empty()) {
      side[s] = 0;
      queue.push_back(s);
    }
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (const auto& inc : g.incident(x))
        if (side[inc.neighbor] == -1) {
          side[inc.neighbor] = side[x];
          queue.push_back(inc.neighbor);
        }
    }
  }
  VertexSubset x(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (side[v] == 0) x.insert(v);
  return switch_by(g, x).negative_edges();
}

VertexSubset bipartite_negation_for_antibalanced_planar(const SignedGraph& g,
                                                        std::span<const int> coloring) {
  const int n = g.vertex_count();
  if (static_cast<int>(coloring.size()) != n)
    throw PreconditionError("coloring must have one entry per vertex");
  for (int c : coloring)
    if (c < 1 || c > 4) throw PreconditionError("coloring must use colors 1 to 4");
  for (const auto& e : g.edges())
    if (coloring[e.u] == coloring[e.v]) throw PreconditionError("coloring is not proper");
  auto to_negative = antibalancing_switch(g);
  if (!to_negative) throw PreconditionError("graph is not antibalanced");
  VertexSubset x = *to_negative;
  for (Vertex v = 0; v < n; ++v)
    if (coloring[v] >= 3) x.toggle(v);
  return x;
}

std::optional<std::vector<Vertex>> find_fully_negative_circle(const SignedGraph& g) {
  const int n = g.vertex_count();
  WorkingSigning w(g);
  // A negative edge lies on a circle iff its ends stay joined without it.
  for (Vertex s = 0; s < n; ++s) {
    for (const auto& inc : g.incident(s)) {
      if (!g.is_negative(inc.edge)) continue;
      std::vector<Vertex> parent(n, -1);
      std::deque<Vertex> queue{s};
      parent[s] = s;
      while (!queue.empty() && parent[inc.neighbor] == -1) {
        Vertex x = queue.front();
        queue.pop_front();
        for (const auto& j : g.incident(x)) {
          if (!g.is_negative(j.edge) || j.edge == inc.edge || parent[j.neighbor] != -1) continue;
          parent[j.neighbor] = x;
          queue.push_back(j.neighbor);
        }
      }
      if (parent[inc.neighbor] == -1) continue;
      std::vector<Vertex> cycle{inc.neighbor};
      while (cycle.back() != s) cycle.push_back(parent[cycle.back()]);
      return canonical_cycle(cycle);
    }
  }
  return std::nullopt;
}

bool fully_negative_path_exists(const SignedGraph& g, Vertex u, Vertex v) {
  if (!g.valid_vertex(u) || !g.valid_vertex(v)) throw InvalidGraphError("vertex out of range");
  return WorkingSigning(g).negative_path(u, v).has_value();
}

long count_fully_negative_circles(const SignedGraph& g) {
  const int n = g.vertex_count();
  WorkingSigning w(g);
  bool simple = true;
  for (Vertex v = 0; v < n && simple; ++v) simple = w.negative_degree(v) <= 2;
  if (simple) return static_cast<long>(w.circles().size());

  // Each circle counted once from its smallest vertex in both directions.
  long twice = 0;
  std::vector<bool> used(n);
  std::function<void(Vertex, Vertex, int)> extend = [&](Vertex start, Vertex x, int len) {
    for (const auto& inc : g.incident(x)) {
      if (!g.is_negative(inc.edge)) continue;
      Vertex y = inc.neighbor;
      if (y == start && len >= 3) ++twice;
      if (y <= start || used[y]) continue;
      used[y] = true;
      extend(start, y, len + 1);
      used[y] = false;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    used[s] = true;
    extend(s, s, 1);
    used[s] = false;
  }
  return twice / 2;
}

}  // namespace negsets
