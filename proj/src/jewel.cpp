#include "beireg/jewel.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace beireg {

int internal_vertex_count(const SimpleGraph& g) {
  int count = 0;
  for (Vertex v = 1; v <= g.order(); ++v)
    if (g.degree(v) >= 2) ++count;
  return count;
}

std::vector<Vertex> n_geq(const SimpleGraph& g, Vertex v, int i) {
  std::vector<Vertex> out;
  for (Vertex u : g.neighbors(v))
    if (g.degree(u) >= i) out.push_back(u);
  return out;
}

JewelProfile jewel_profile(const Tree& t) {
  const auto& g = t.graph();
  JewelProfile prof;
  prof.iv = internal_vertex_count(g);

  std::vector<int> d(static_cast<std::size_t>(g.order()) + 1, 0);
  std::vector<char> is_center(static_cast<std::size_t>(g.order()) + 1, 0);
  for (Vertex v = 1; v <= g.order(); ++v) {
    d[v] = d_value(g, v);
    if (d[v] >= 3) {
      is_center[v] = 1;
      prof.centers.push_back({v, d[v]});
      prof.d_g += d[v];
    }
  }
  prof.s = static_cast<int>(prof.centers.size());

  std::vector<char> seen(static_cast<std::size_t>(g.order()) + 1, 0);
  for (const auto& c : prof.centers) {
    if (seen[c.vertex]) continue;
    std::vector<Vertex> comp{c.vertex};
    seen[c.vertex] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (Vertex w : g.neighbors(comp[k]))
        if (is_center[w] && !seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    prof.components.push_back(static_cast<int>(comp.size()));
    if (comp.size() == 2) ++prof.e_g;
  }
  prof.p = static_cast<int>(prof.components.size());

  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.degree(v) != 3 || d[v] != 2) continue;
    auto high = n_geq(g, v, 3);
    if (std::all_of(high.begin(), high.end(), [&](Vertex u) { return is_center[u] != 0; }))
      prof.c_g.push_back(v);
  }
  prof.mu = static_cast<int>(prof.c_g.size());
  return prof;
}

LabelledGraph jewel_subgraph(const Tree& t, Vertex c) {
  const auto& g = t.graph();
  auto supports = n_geq(g, c, 3);
  if (supports.size() < 3)
    throw GraphError("vertex " + std::to_string(c) + " is not a jewel center");
  std::vector<Vertex> members;
  for (Vertex u : supports) {
    auto nb = g.closed_neighborhood(u);
    members.insert(members.end(), nb.begin(), nb.end());
  }
  return induced_subgraph(g, members);
}

std::optional<int> is_caterpillar(const Tree& t) {
  const auto& g = t.graph();
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.degree(v) < 2) continue;
    int internal_nb = 0;
    for (Vertex u : g.neighbors(v))
      if (g.degree(u) >= 2) ++internal_nb;
    if (internal_nb > 2) return std::nullopt;
  }
  // Internal vertices of a tree induce a subtree, so max degree <= 2 makes it a path.
  return spine(t).length();
}

namespace {

// Mutable working copy used while trimming. Labels are never reused.
struct WorkGraph {
  std::vector<std::vector<Vertex>> adj;
  std::vector<char> alive;

  explicit WorkGraph(const SimpleGraph& g)
      : adj(static_cast<std::size_t>(g.order()) + 1), alive(static_cast<std::size_t>(g.order()) + 1, 1) {
    alive[0] = 0;
    for (Vertex v = 1; v <= g.order(); ++v) adj[v] = g.neighbors(v);
  }

  int degree(Vertex v) const { return static_cast<int>(adj[v].size()); }

  Vertex add_vertex() {
    adj.emplace_back();
    alive.push_back(1);
    return static_cast<Vertex>(adj.size()) - 1;
  }

  void connect(Vertex a, Vertex b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  void remove(Vertex v) {
    for (Vertex w : adj[v]) std::erase(adj[w], v);
    adj[v].clear();
    alive[v] = 0;
  }
};

struct Candidate {
  Vertex attachment = 0;
  std::vector<Vertex> branch;
  std::vector<Vertex> spine;  // v_1, ..., v_{l-1}
};

// Caterpillar formed by v and the branch through its neighbour u, if the
// trimming hypothesis holds for it.
std::optional<Candidate> attached_caterpillar(const WorkGraph& w, Vertex v, Vertex u) {
  std::vector<Vertex> branch{u};
  std::set<Vertex> in_branch{u};
  for (std::size_t k = 0; k < branch.size(); ++k)
    for (Vertex x : w.adj[branch[k]])
      if (x != v && in_branch.insert(x).second) branch.push_back(x);

  if (w.degree(u) < 2) return std::nullopt;
  std::vector<Vertex> internal;
  for (Vertex x : branch) {
    int deg = w.degree(x);
    if (deg == 2) return std::nullopt;  // degree hypothesis deg(v_i) >= 3
    if (deg >= 3) internal.push_back(x);
  }
  if (internal.size() < 2) return std::nullopt;  // l >= 3

  // Internal vertices must form a path with u at one end.
  auto internal_neighbors = [&](Vertex x) {
    std::vector<Vertex> out;
    for (Vertex y : w.adj[x])
      if (y != v && w.degree(y) >= 3 && in_branch.count(y)) out.push_back(y);
    return out;
  };
  if (internal_neighbors(u).size() != 1) return std::nullopt;
  std::vector<Vertex> walk{u};
  Vertex prev = 0, cur = u;
  while (true) {
    auto nb = internal_neighbors(cur);
    if (nb.size() > 2) return std::nullopt;
    Vertex next = 0;
    for (Vertex y : nb)
      if (y != prev) next = y;
    if (next == 0) break;
    prev = cur;
    cur = next;
    walk.push_back(cur);
  }
  if (walk.size() != internal.size()) return std::nullopt;

  std::reverse(walk.begin(), walk.end());
  return Candidate{v, std::move(branch), std::move(walk)};
}

}  // namespace

CaterpillarTrim trim_caterpillars(const Tree& t) {
  WorkGraph w(t.graph());
  CaterpillarTrim out{t, 0, {}, {}};

  while (true) {
    std::optional<Candidate> best;
    for (Vertex v = 1; v < static_cast<Vertex>(w.adj.size()); ++v) {
      if (!w.alive[v]) continue;
      auto nbs = w.adj[v];
      std::sort(nbs.begin(), nbs.end());
      for (Vertex u : nbs) {
        auto cand = attached_caterpillar(w, v, u);
        if (cand && (!best || cand->spine.size() > best->spine.size())) best = std::move(cand);
      }
    }
    if (!best) break;

    CaterpillarReplacement rep;
    rep.attachment = best->attachment;
    rep.length = static_cast<int>(best->spine.size()) + 1;
    int degree_sum = 0;
    for (Vertex x : best->spine) {
      rep.spine_degrees.push_back(w.degree(x));
      degree_sum += w.degree(x);
    }
    rep.star_size = degree_sum - 2 * rep.length + 3;

    for (Vertex x : best->branch) w.remove(x);
    Vertex center = w.add_vertex();
    w.connect(best->attachment, center);
    for (int k = 1; k < rep.star_size; ++k) w.connect(center, w.add_vertex());

    out.length_credit += rep.length - 2;
    out.replaced.push_back(std::move(rep));
  }

  std::vector<Vertex> labels;
  for (Vertex v = 1; v < static_cast<Vertex>(w.adj.size()); ++v)
    if (w.alive[v]) labels.push_back(v);
  std::vector<int> index(w.adj.size(), 0);
  for (std::size_t k = 0; k < labels.size(); ++k) index[labels[k]] = static_cast<int>(k) + 1;
  std::vector<Edge> edges;
  for (Vertex v : labels)
    for (Vertex x : w.adj[v])
      if (v < x) edges.emplace_back(index[v], index[x]);
  out.trimmed = Tree(SimpleGraph(static_cast<int>(labels.size()), edges));
  out.labels = std::move(labels);
  return out;
}

}  // namespace beireg
