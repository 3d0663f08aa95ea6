#include "beireg/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace beireg {

namespace {

std::string describe(Edge e) {
  return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

}  // namespace

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) + 1) {
  if (n < 0) throw GraphError("negative vertex count");
}

SimpleGraph::SimpleGraph(int n, std::span<const Edge> edges) : SimpleGraph(n) {
  for (auto [u, v] : edges) {
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    check_vertex(u);
    check_vertex(v);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    edge_count_ += nb.size();
  }
  edge_count_ /= 2;
}

SimpleGraph SimpleGraph::path(int n) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  return SimpleGraph(n, e);
}

SimpleGraph SimpleGraph::complete(int n) {
  std::vector<Edge> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return SimpleGraph(n, e);
}

SimpleGraph SimpleGraph::star(int leaves) {
  std::vector<Edge> e;
  for (int v = 2; v <= leaves + 1; ++v) e.emplace_back(1, v);
  return SimpleGraph(leaves + 1, e);
}

void SimpleGraph::check_vertex(Vertex v) const {
  if (!contains(v))
    throw GraphError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

const std::vector<Vertex>& SimpleGraph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<Vertex> SimpleGraph::closed_neighborhood(Vertex v) const {
  auto nb = neighbors(v);
  nb.insert(std::upper_bound(nb.begin(), nb.end(), v), v);
  return nb;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 1; u <= n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<Vertex> SimpleGraph::vertices() const {
  std::vector<Vertex> out(static_cast<std::size_t>(n_));
  std::iota(out.begin(), out.end(), 1);
  return out;
}

Tree::Tree(SimpleGraph g) : g_(std::move(g)) {
  if (g_.order() == 0) throw NotATreeError("empty graph is not a tree");
  if (!is_connected(g_)) throw NotATreeError("graph is disconnected");
  if (g_.size() != static_cast<std::size_t>(g_.order() - 1))
    throw NotATreeError("graph has a cycle");
}

std::vector<Vertex> Tree::leaves() const {
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= order(); ++v)
    if (degree(v) == 1) out.push_back(v);
  return out;
}

// Parsing ---------------------------------------------------------------------

SimpleGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int declared = -1;
  int max_label = 0;
  int lineno = 0;
  bool seen_edge = false;
  std::vector<Edge> edges;

  auto parse_int = [&](const std::string& tok) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("line " + std::to_string(lineno) + ": not an integer: '" + tok + "'");
    if (value <= 0)
      throw ParseError("line " + std::to_string(lineno) + ": labels must be positive");
    if (value > 1'000'000)
      throw ParseError("line " + std::to_string(lineno) + ": label too large");
    return static_cast<int>(value);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok[0].rfind("vertices", 0) == 0) {
      if (seen_edge || declared >= 0)
        throw ParseError("line " + std::to_string(lineno) + ": misplaced vertices header");
      std::string rest = tok[0].substr(8);
      if (rest == ":" && tok.size() == 2) {
        declared = parse_int(tok[1]);
      } else if (rest.size() > 1 && rest[0] == ':' && tok.size() == 1) {
        declared = parse_int(rest.substr(1));
      } else {
        throw ParseError("line " + std::to_string(lineno) + ": malformed vertices header");
      }
      continue;
    }
    if (tok.size() != 2)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'u v'");
    int u = parse_int(tok[0]);
    int v = parse_int(tok[1]);
    if (u == v) throw ParseError("line " + std::to_string(lineno) + ": self-loop at " + tok[0]);
    edges.push_back(make_edge(u, v));
    max_label = std::max({max_label, u, v});
    seen_edge = true;
  }
  if (declared >= 0 && max_label > declared)
    throw ParseError("label " + std::to_string(max_label) + " exceeds declared vertex count " +
                     std::to_string(declared));
  int n = declared >= 0 ? declared : max_label;
  if (n == 0) throw ParseError("empty graph document");
  return SimpleGraph(n, edges);
}

SimpleGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string format_edge_list(const SimpleGraph& g) {
  std::string out = "vertices: " + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

// Queries ---------------------------------------------------------------------

std::vector<std::vector<Vertex>> connected_components(const SimpleGraph& g) {
  std::vector<int> seen(static_cast<std::size_t>(g.order()) + 1, 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 1; s <= g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (Vertex w : g.neighbors(comp[k]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const SimpleGraph& g) { return connected_components(g).size() <= 1; }

std::vector<int> distances_from(const SimpleGraph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()) + 1, -1);
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

std::vector<Vertex> tree_path(const Tree& t, Vertex from, Vertex to) {
  const auto& g = t.graph();
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()) + 1, 0);
  std::vector<Vertex> stack{to};
  parent[to] = to;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u))
      if (parent[w] == 0) {
        parent[w] = u;
        stack.push_back(w);
      }
  }
  std::vector<Vertex> out{from};
  while (out.back() != to) out.push_back(parent[out.back()]);
  return out;
}

SpinePath spine(const Tree& t) {
  const auto& g = t.graph();
  int best = -1;
  Vertex a = 1, b = 1;
  for (Vertex u = 1; u <= g.order(); ++u) {
    auto dist = distances_from(g, u);
    for (Vertex v = u; v <= g.order(); ++v)
      if (dist[v] > best) {
        best = dist[v];
        a = u;
        b = v;
      }
  }
  return SpinePath{tree_path(t, a, b)};
}

// Constructions ---------------------------------------------------------------

LabelledGraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> w) {
  std::vector<Vertex> labels(w.begin(), w.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<int> index(static_cast<std::size_t>(g.order()) + 1, 0);
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (!g.contains(labels[k]))
      throw GraphError("vertex " + std::to_string(labels[k]) + " out of range");
    index[labels[k]] = static_cast<int>(k) + 1;
  }
  std::vector<Edge> edges;
  for (Vertex u : labels)
    for (Vertex v : g.neighbors(u))
      if (u < v && index[v]) edges.emplace_back(index[u], index[v]);
  return {SimpleGraph(static_cast<int>(labels.size()), edges), std::move(labels)};
}

LabelledGraph drop_isolated(const SimpleGraph& g) {
  std::vector<Vertex> keep;
  for (Vertex v = 1; v <= g.order(); ++v)
    if (g.degree(v) > 0) keep.push_back(v);
  return induced_subgraph(g, keep);
}

SimpleGraph delete_edge(const SimpleGraph& g, Edge e) {
  e = make_edge(e.first, e.second);
  if (!g.has_edge(e.first, e.second)) throw GraphError("edge " + describe(e) + " not present");
  auto edges = g.edges();
  std::erase(edges, e);
  return SimpleGraph(g.order(), edges);
}

SimpleGraph add_edge(const SimpleGraph& g, Edge e) {
  e = make_edge(e.first, e.second);
  if (e.first == e.second) throw GraphError("self-loop " + describe(e));
  if (!g.contains(e.first) || !g.contains(e.second))
    throw GraphError("edge " + describe(e) + " out of range");
  if (g.has_edge(e.first, e.second)) throw GraphError("edge " + describe(e) + " already present");
  auto edges = g.edges();
  edges.push_back(e);
  return SimpleGraph(g.order(), edges);
}

SimpleGraph delete_vertex(const SimpleGraph& g, Vertex v) {
  if (!g.contains(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
  auto edges = g.edges();
  std::erase_if(edges, [v](Edge e) { return e.first == v || e.second == v; });
  return SimpleGraph(g.order(), edges);
}

namespace {

void add_clique(std::vector<Edge>& edges, std::span<const Vertex> vs) {
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b) edges.push_back(make_edge(vs[a], vs[b]));
}

}  // namespace

SimpleGraph g_e_completion(const SimpleGraph& g, Edge e) {
  auto [i, j] = e;
  if (i == j) throw GraphError("degenerate pair " + describe(e));
  auto edges = g.edges();
  add_clique(edges, g.neighbors(i));
  add_clique(edges, g.neighbors(j));
  return SimpleGraph(g.order(), edges);
}

SimpleGraph complete_closed_neighborhood(const SimpleGraph& g, Vertex v) {
  auto edges = g.edges();
  add_clique(edges, g.closed_neighborhood(v));
  return SimpleGraph(g.order(), edges);
}

EhhTriple ehh_transform(const SimpleGraph& g, Vertex v) {
  auto prime = complete_closed_neighborhood(g, v);
  return {prime, delete_vertex(g, v), delete_vertex(prime, v)};
}

SimpleGraph attach_clique(const SimpleGraph& g, Vertex v, int s) {
  if (!g.contains(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
  if (s < 2) throw GraphError("clique size must be at least 2");
  auto edges = g.edges();
  std::vector<Vertex> clique{v};
  for (int k = 1; k < s; ++k) clique.push_back(g.order() + k);
  add_clique(edges, clique);
  return SimpleGraph(g.order() + s - 1, edges);
}

SimpleGraph attach_star_via_leaf(const SimpleGraph& g, Vertex v, int s) {
  if (!g.contains(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
  if (s < 2) throw GraphError("star size must be at least 2");
  auto edges = g.edges();
  Vertex center = g.order() + 1;
  edges.emplace_back(v, center);
  for (int k = 2; k <= s; ++k) edges.emplace_back(center, g.order() + k);
  return SimpleGraph(g.order() + s, edges);
}

SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h) {
  auto edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
  return SimpleGraph(g.order() + h.order(), edges);
}

SimpleGraph glue(const SimpleGraph& g, Vertex u, const SimpleGraph& h, Vertex w) {
  if (!g.contains(u) || !h.contains(w)) throw GraphError("glue vertex out of range");
  std::vector<Vertex> map(static_cast<std::size_t>(h.order()) + 1, 0);
  int next = g.order();
  for (Vertex x = 1; x <= h.order(); ++x) map[x] = x == w ? u : ++next;
  auto edges = g.edges();
  for (auto [a, b] : h.edges()) edges.push_back(make_edge(map[a], map[b]));
  return SimpleGraph(next, edges);
}

// Degree-two splitting ----------------------------------------------------------

namespace {

// One piece at a time: split at the first listed degree-two vertex.
std::vector<TreePiece> split_once(const TreePiece& piece, const std::vector<int>& rank) {
  const auto& g = piece.tree.graph();
  Vertex cut = 0;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.degree(v) != 2) continue;
    if (cut == 0 || rank[piece.labels[v - 1]] < rank[piece.labels[cut - 1]]) cut = v;
  }
  if (cut == 0) return {piece};

  std::vector<TreePiece> out;
  for (Vertex side : g.neighbors(cut)) {
    std::vector<Vertex> part{cut, side};
    std::vector<char> seen(static_cast<std::size_t>(g.order()) + 1, 0);
    seen[cut] = seen[side] = 1;
    for (std::size_t k = 1; k < part.size(); ++k)
      for (Vertex w : g.neighbors(part[k]))
        if (!seen[w]) {
          seen[w] = 1;
          part.push_back(w);
        }
    auto sub = induced_subgraph(g, part);
    std::vector<Vertex> labels;
    for (Vertex x : sub.labels) labels.push_back(piece.labels[x - 1]);
    out.push_back({Tree(std::move(sub.graph)), std::move(labels)});
  }
  return out;
}

}  // namespace

std::vector<TreePiece> split_at_degree_two(const Tree& t, std::span<const Vertex> order) {
  std::vector<int> rank(static_cast<std::size_t>(t.order()) + 1, t.order() + 1);
  int r = 0;
  for (Vertex v : order)
    if (v >= 1 && v <= t.order() && rank[v] > t.order()) rank[v] = r++;
  for (Vertex v = 1; v <= t.order(); ++v)
    if (rank[v] > t.order()) rank[v] = r++;

  std::vector<Vertex> identity(static_cast<std::size_t>(t.order()));
  std::iota(identity.begin(), identity.end(), 1);
  std::vector<TreePiece> done;
  std::vector<TreePiece> todo{{t, identity}};
  while (!todo.empty()) {
    TreePiece piece = std::move(todo.back());
    todo.pop_back();
    auto parts = split_once(piece, rank);
    if (parts.size() == 1) {
      done.push_back(std::move(parts.front()));
    } else {
      for (auto& p : parts) todo.push_back(std::move(p));
    }
  }
  std::sort(done.begin(), done.end(),
            [](const TreePiece& a, const TreePiece& b) { return a.labels < b.labels; });
  return done;
}

std::vector<TreePiece> split_at_degree_two(const Tree& t) { return split_at_degree_two(t, {}); }

}  // namespace beireg
