#include "beireg/prufer.hpp"

#include <queue>
#include <string>

namespace beireg {

Tree prufer_decode(int n, std::span<const Vertex> seq) {
  if (n < 1) throw GraphError("tree needs at least one vertex");
  if (n == 1) {
    if (!seq.empty()) throw GraphError("Prüfer sequence for n=1 must be empty");
    return Tree(SimpleGraph(1));
  }
  if (seq.size() != static_cast<std::size_t>(n - 2))
    throw GraphError("Prüfer sequence for n=" + std::to_string(n) + " needs " +
                     std::to_string(n - 2) + " labels");
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
  for (Vertex a : seq) {
    if (a < 1 || a > n) throw GraphError("Prüfer label " + std::to_string(a) + " out of range");
    ++degree[a];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 1; v <= n; ++v)
    if (degree[v] == 1) leaves.push(v);

  std::vector<Edge> edges;
  for (Vertex a : seq) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.push_back(make_edge(leaf, a));
    if (--degree[a] == 1) leaves.push(a);
  }
  Vertex u = leaves.top();
  leaves.pop();
  edges.push_back(make_edge(u, leaves.top()));
  return Tree(SimpleGraph(n, edges));
}

std::vector<Vertex> prufer_encode(const Tree& t) {
  const int n = t.order();
  if (n <= 2) return {};
  std::vector<int> degree(static_cast<std::size_t>(n) + 1);
  std::vector<char> removed(static_cast<std::size_t>(n) + 1, 0);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 1; v <= n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Vertex> seq;
  while (static_cast<int>(seq.size()) < n - 2) {
    Vertex leaf = leaves.top();
    leaves.pop();
    removed[leaf] = 1;
    for (Vertex w : t.neighbors(leaf)) {
      if (removed[w]) continue;
      seq.push_back(w);
      if (--degree[w] == 1) leaves.push(w);
    }
  }
  return seq;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

Tree random_tree(int n, std::mt19937_64& rng) {
  std::vector<Vertex> seq;
  for (int k = 0; k + 2 < n; ++k) seq.push_back(uniform_int(rng, 1, n));
  return prufer_decode(n, seq);
}

Tree random_tree(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_tree(n, rng);
}

void for_each_labelled_tree(int n, const std::function<void(const Tree&)>& visit) {
  if (n < 1) return;
  if (n <= 2) {
    visit(prufer_decode(n, {}));
    return;
  }
  std::vector<Vertex> seq(static_cast<std::size_t>(n - 2), 1);
  while (true) {
    visit(prufer_decode(n, seq));
    int k = n - 3;
    while (k >= 0 && seq[k] == n) seq[k--] = 1;
    if (k < 0) break;
    ++seq[k];
  }
}

}  // namespace beireg
