#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace beireg {

/// Vertices are labelled 1..n.
using Vertex = int;

/// Unordered pair stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotATreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation's precondition on its graph argument fails.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple graph on the vertex set {1, ..., n}. Isolated vertices are
/// allowed; every edit returns a new graph.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);
  /// Duplicate edges are merged. Self-loops and out-of-range labels throw GraphError.
  SimpleGraph(int n, std::span<const Edge> edges);

  static SimpleGraph path(int n);
  static SimpleGraph complete(int n);
  /// K_{1,leaves} with center 1.
  static SimpleGraph star(int leaves);

  int order() const { return n_; }
  std::size_t size() const { return edge_count_; }
  bool contains(Vertex v) const { return v >= 1 && v <= n_; }
  bool has_edge(Vertex u, Vertex v) const;
  /// Sorted open neighbourhood N(v).
  const std::vector<Vertex>& neighbors(Vertex v) const;
  /// Sorted closed neighbourhood N[v].
  std::vector<Vertex> closed_neighborhood(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  /// All edges, lexicographically sorted.
  std::vector<Edge> edges() const;
  std::vector<Vertex> vertices() const;

  bool operator==(const SimpleGraph& other) const = default;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Vertex>> adj_;  // slot 0 unused
};

/// A connected acyclic SimpleGraph.
class Tree {
 public:
  /// Throws NotATreeError on a cycle or a disconnected graph.
  explicit Tree(SimpleGraph g);

  const SimpleGraph& graph() const { return g_; }
  int order() const { return g_.order(); }
  int degree(Vertex v) const { return g_.degree(v); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return g_.neighbors(v); }
  std::vector<Vertex> leaves() const;

  bool operator==(const Tree& other) const = default;

 private:
  SimpleGraph g_;
};

inline Tree validate_tree(SimpleGraph g) { return Tree(std::move(g)); }

/// A longest path of a tree, stored endpoint to endpoint.
struct SpinePath {
  std::vector<Vertex> vertices;
  int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
};

/// Graph together with the original label of each of its vertices.
struct LabelledGraph {
  SimpleGraph graph;
  std::vector<Vertex> labels;  // labels[k - 1] is the original label of vertex k
};

struct TreePiece {
  Tree tree;
  std::vector<Vertex> labels;  // labels[k - 1] is the original label of vertex k
};

/// Graphs produced by the Ene-Herzog-Hibi exact sequence at a vertex.
struct EhhTriple {
  SimpleGraph g_prime;        // N[v] completed to a clique
  SimpleGraph g_doubleprime;  // v deleted
  SimpleGraph g_tilde;        // v deleted from g_prime
};

// Parsing and formatting -----------------------------------------------------

/// Edge-list document: optional `vertices: <n>` line, then `u v` per line,
/// `#` comments. Throws ParseError.
SimpleGraph parse_graph(std::string_view text);
SimpleGraph read_graph_file(const std::string& path);
/// Inverse of parse_graph; always writes the `vertices:` header.
std::string format_edge_list(const SimpleGraph& g);

// Queries ---------------------------------------------------------------------

std::vector<std::vector<Vertex>> connected_components(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);
/// BFS distances from `source`; -1 for unreachable, slot 0 unused.
std::vector<int> distances_from(const SimpleGraph& g, Vertex source);
/// Unique path between two vertices of a tree, from `from` to `to`.
std::vector<Vertex> tree_path(const Tree& t, Vertex from, Vertex to);
/// Longest path; ties go to the lexicographically smallest endpoint pair.
SpinePath spine(const Tree& t);

// Constructions ---------------------------------------------------------------

/// Relabels W (sorted, deduplicated) to 1..|W|.
LabelledGraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> w);
/// Removes isolated vertices; display helper.
LabelledGraph drop_isolated(const SimpleGraph& g);

SimpleGraph delete_edge(const SimpleGraph& g, Edge e);
SimpleGraph add_edge(const SimpleGraph& g, Edge e);
/// Removes every edge at v; v stays as an isolated vertex.
SimpleGraph delete_vertex(const SimpleGraph& g, Vertex v);
/// G_e: joins every pair inside N(i) and every pair inside N(j).
SimpleGraph g_e_completion(const SimpleGraph& g, Edge e);
/// Completes N[v] to a clique.
SimpleGraph complete_closed_neighborhood(const SimpleGraph& g, Vertex v);
EhhTriple ehh_transform(const SimpleGraph& g, Vertex v);

/// G_s^v: v identified with a vertex of a fresh K_s (labels n+1..n+s-1).
SimpleGraph attach_clique(const SimpleGraph& g, Vertex v, int s);
/// Gbar_s^v: v identified with a leaf of a fresh K_{1,s}. The center gets
/// label n+1, the remaining s-1 leaves n+2..n+s.
SimpleGraph attach_star_via_leaf(const SimpleGraph& g, Vertex v, int s);
/// h's vertices are shifted by g.order().
SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h);
/// Identifies u in g with w in h. g keeps its labels; h's other vertices
/// follow in increasing order.
SimpleGraph glue(const SimpleGraph& g, Vertex u, const SimpleGraph& h, Vertex w);

/// Splits repeatedly at degree-two vertices until none is left in any piece.
/// Both sides keep a copy of the cut vertex. Pieces are returned sorted by
/// their original label sets.
std::vector<TreePiece> split_at_degree_two(const Tree& t);
/// Same, processing cut vertices in the given order (unlisted ones last).
std::vector<TreePiece> split_at_degree_two(const Tree& t, std::span<const Vertex> order);

}  // namespace beireg
