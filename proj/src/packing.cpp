#include "negsets/packing.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace negsets {

std::vector<MultiEdge> ClassGraph::edges() const {
  std::vector<MultiEdge> out;
  for (auto [a, b] : negative) out.push_back({a, b, Sign::negative});
  for (auto [a, b] : positive) out.push_back({a, b, Sign::positive});
  return out;
}

std::optional<std::vector<int>> ClassGraph::harary_sides() const {
  auto e = edges();
  return multigraph_harary_sides(vertex_count, e);
}

bool ClassGraph::balanced() const { return harary_sides().has_value(); }

bool ClassGraph::has_negative_digon() const {
  std::set<std::pair<int, int>> pos(positive.begin(), positive.end());
  for (auto [a, b] : negative) {
    if (pos.count({std::min(a, b), std::max(a, b)})) return true;
  }
  return false;
}

NegativeComponentClasses negative_component_classes(const SignedGraph& g) {
  EdgeSubset negative = g.negative_edges();
  if (negative.empty()) {
    throw PreconditionError("negative_component_classes: no negative edges, so there is no stable bipartition");
  }
  auto side = stable_bipartition(negative);
  if (!side) throw PreconditionError("negative_component_classes: negative edge set is not bipartite");

  const Subgraph neg = edge_induced_negative(g);
  NegativeComponentClasses out;
  for (const auto& comp : connected_components(neg.graph)) {
    std::vector<Vertex> first;
    std::vector<Vertex> second;
    // stable_bipartition puts each component's smallest vertex on side 0.
    for (Vertex local : comp) {
      Vertex v = neg.to_host[local];
      ((*side)[v] == 0 ? first : second).push_back(v);
    }
    out.classes.push_back(std::move(first));
    out.classes.push_back(std::move(second));
  }
  return out;
}

std::vector<int> positive_distances_from(const SignedGraph& g, const std::vector<Vertex>& sources) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
  std::queue<Vertex> q;
  for (Vertex s : sources) {
    if (dist[s] != 0) {
      dist[s] = 0;
      q.push(s);
    }
  }
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (const auto& inc : g.incident(v)) {
      if (g.is_negative(inc.edge) || dist[inc.neighbor] != kUnreachable) continue;
      dist[inc.neighbor] = dist[v] + 1;
      q.push(inc.neighbor);
    }
  }
  return dist;
}

ClassDistances class_distances(const SignedGraph& g, const NegativeComponentClasses& classes) {
  const int k = classes.class_count();
  ClassDistances out(k, std::vector<int>(k, kUnreachable));
  for (int a = 0; a < k; ++a) {
    auto dist = positive_distances_from(g, classes.classes[a]);
    for (int b = 0; b < k; ++b) {
      int best = kUnreachable;
      for (Vertex v : classes.classes[b]) best = std::min(best, dist[v]);
      out[a][b] = best;
    }
  }
  return out;
}

std::vector<int> distance_thresholds(const ClassDistances& distances) {
  std::set<int> values;
  for (std::size_t a = 0; a < distances.size(); ++a) {
    for (std::size_t b = a + 1; b < distances.size(); ++b) {
      if (distances[a][b] != kUnreachable) values.insert(distances[a][b]);
    }
  }
  return {values.begin(), values.end()};
}

ClassGraph build_phi(const NegativeComponentClasses& classes, const ClassDistances& distances,
                     int k) {
  auto w = distance_thresholds(distances);
  if (k < 1 || k > static_cast<int>(w.size())) {
    throw PreconditionError("build_phi: index " + std::to_string(k) + " outside 1.." +
                            std::to_string(w.size()));
  }
  const int limit = w[k - 1];
  const int count = classes.class_count();
  ClassGraph phi;
  phi.vertex_count = count;
  for (int i = 0; i < classes.component_count(); ++i) phi.negative.emplace_back(2 * i, 2 * i + 1);

  std::set<std::pair<int, int>> positive;
  for (int a = 0; a < count; ++a) {
    for (int b = a + 1; b < count; ++b) {
      if (distances[a][b] > limit) continue;
      positive.emplace(a, b);
      int ma = NegativeComponentClasses::mirror(a);
      int mb = NegativeComponentClasses::mirror(b);
      positive.emplace(std::min(ma, mb), std::max(ma, mb));
    }
  }
  phi.positive.assign(positive.begin(), positive.end());
  return phi;
}

namespace {

void check_family(const SignedGraph& g, const std::vector<EdgeSubset>& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!is_negation_set(g, family[i])) {
      throw std::logic_error("packing: family member " + to_string(family[i]) +
                             " is not a negation set");
    }
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (family[i].intersects(family[j])) {
        throw std::logic_error("packing: family members " + to_string(family[i]) + " and " +
                               to_string(family[j]) + " intersect");
      }
    }
  }
}

}  // namespace

PackingResult packing_number(const SignedGraph& g) {
  if (!is_connected(g)) throw PreconditionError("packing_number: graph must be connected");
  if (is_balanced(g)) {
    throw PreconditionError(
        "packing_number: graph is balanced; packing negation sets there is packing cuts, "
        "which this operation does not handle");
  }
  PackingResult out;
  const EdgeSubset b = g.negative_edges();
  out.family.push_back(b);
  if (!is_bipartite(b)) return out;

  const auto classes = negative_component_classes(g);
  const auto distances = class_distances(g, classes);
  out.thresholds = distance_thresholds(distances);
  const int l = static_cast<int>(out.thresholds.size());

  for (int k = 1; k <= l; ++k) {
    bool balanced = build_phi(classes, distances, k).balanced();
    out.phi_balanced.push_back(balanced);
    if (!balanced && out.first_unbalanced == 0) out.first_unbalanced = k;
  }
  if (out.first_unbalanced == 0) {
    throw std::logic_error("packing: every class graph is balanced for an unbalanced input");
  }
  int intra = kUnreachable;
  for (int i = 0; i < classes.component_count(); ++i) intra = std::min(intra, distances[2 * i][2 * i + 1]);
  if (intra != kUnreachable) {
    auto it = std::lower_bound(out.thresholds.begin(), out.thresholds.end(), intra);
    out.digon_index = static_cast<int>(it - out.thresholds.begin()) + 1;
  }

  const int p = out.first_unbalanced;
  std::vector<int> class_side(static_cast<std::size_t>(classes.class_count()));
  if (p == 1) {
    for (int c = 0; c < classes.class_count(); ++c) class_side[c] = c % 2;
  } else {
    class_side = *build_phi(classes, distances, p - 1).harary_sides();
  }
  for (int c = 0; c < classes.class_count(); ++c) {
    auto& side = class_side[c] == 0 ? out.side_one : out.side_two;
    side.insert(side.end(), classes.classes[c].begin(), classes.classes[c].end());
  }
  std::sort(out.side_one.begin(), out.side_one.end());
  std::sort(out.side_two.begin(), out.side_two.end());

  const int wp = out.thresholds[p - 1];
  auto dist = positive_distances_from(g, out.side_one);
  int reached = kUnreachable;
  for (Vertex v : out.side_two) reached = std::min(reached, dist[v]);
  if (reached != wp) {
    throw std::logic_error("packing: realizing bipartition has distance " +
                           (reached == kUnreachable ? std::string("infinity") : std::to_string(reached)) +
                           ", expected " + std::to_string(wp));
  }
  out.distance = wp;

  for (int i = 0; i < wp; ++i) {
    VertexSubset layer(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (dist[v] <= i) layer.insert(v);
    }
    out.family.push_back(negation_set_from_switching(g, layer));
    out.layers.push_back(std::move(layer));
  }
  out.packing_number = static_cast<int>(out.family.size());
  check_family(g, out.family);
  return out;
}

}  // namespace negsets
