#include "beireg/initial_ideal.hpp"

#include <algorithm>
#include <bit>

namespace beireg {

SquarefreeMonomialIdeal::SquarefreeMonomialIdeal(int num_vars, std::vector<VarSet> generators)
    : num_vars_(num_vars) {
  if (num_vars < 0 || num_vars > kMaxRingVars) throw std::invalid_argument("bad variable count");
  std::sort(generators.begin(), generators.end(), [](VarSet a, VarSet b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (VarSet g : generators) {
    if (num_vars < kMaxRingVars && (g >> num_vars) != 0)
      throw std::invalid_argument("generator uses a variable out of range");
    if (!contains(g)) gens_.push_back(g);
  }
  std::sort(gens_.begin(), gens_.end());
}

bool SquarefreeMonomialIdeal::contains(VarSet monomial) const {
  return std::any_of(gens_.begin(), gens_.end(), [monomial](VarSet g) { return (g & ~monomial) == 0; });
}

std::vector<EdgeBinomial> edge_binomials(const SimpleGraph& g) {
  std::vector<EdgeBinomial> out;
  for (auto [u, v] : g.edges()) out.push_back({u, v});
  return out;
}

namespace {

using VertexMask = std::uint64_t;

VertexMask bit(Vertex v) { return VertexMask{1} << (v - 1); }

// Whether i and j are connected inside the vertex set `allowed`.
bool connected_within(const std::vector<VertexMask>& nbr, Vertex i, Vertex j, VertexMask allowed) {
  VertexMask reached = bit(i), frontier = bit(i);
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) next |= nbr[std::countr_zero(f) + 1];
    next &= allowed & ~reached;
    reached |= next;
    frontier = next;
  }
  return (reached & bit(j)) != 0;
}

VarSet leading_monomial(int n, Vertex i, Vertex j, const std::vector<Vertex>& interior) {
  VarSet m = x_var(i) | y_var(n, j);
  for (Vertex k : interior) m |= k > j ? x_var(k) : y_var(n, k);
  return m;
}

struct PathSearch {
  const SimpleGraph& g;
  std::vector<VertexMask> nbr;
  std::vector<AdmissiblePath> out;
  Vertex start = 0;
  std::vector<Vertex> path;
  VertexMask on_path = 0;

  bool minimal(Vertex j) const {
    VertexMask interior = on_path & ~bit(start);
    for (VertexMask f = interior; f; f &= f - 1) {
      VertexMask without = (interior & ~(f & -f)) | bit(start) | bit(j);
      if (connected_within(nbr, start, j, without)) return false;
    }
    return true;
  }

  // `ceiling`: interior vertices above `start` force j below the smallest of them.
  void extend(Vertex u, Vertex ceiling) {
    for (Vertex w : g.neighbors(u)) {
      if (on_path & bit(w)) continue;
      if (w > start && w < ceiling && minimal(w)) {
        std::vector<Vertex> interior(path.begin() + 1, path.end());
        out.push_back({start, w, interior, leading_monomial(g.order(), start, w, interior)});
      }
      Vertex next_ceiling = w > start ? std::min(ceiling, w) : ceiling;
      if (next_ceiling <= start + 1) continue;
      path.push_back(w);
      on_path |= bit(w);
      extend(w, next_ceiling);
      on_path &= ~bit(w);
      path.pop_back();
    }
  }
};

bool is_forest(const SimpleGraph& g) {
  return g.size() + connected_components(g).size() == static_cast<std::size_t>(g.order());
}

std::vector<AdmissiblePath> forest_paths(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<AdmissiblePath> out;
  for (Vertex i = 1; i <= n; ++i) {
    std::vector<Vertex> parent(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Vertex> stack{i};
    parent[i] = i;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u))
        if (parent[w] == 0) {
          parent[w] = u;
          stack.push_back(w);
        }
    }
    for (Vertex j = i + 1; j <= n; ++j) {
      if (parent[j] == 0) continue;
      std::vector<Vertex> interior;
      bool ok = true;
      for (Vertex k = parent[j]; k != i; k = parent[k]) {
        if (k > i && k < j) {
          ok = false;
          break;
        }
        interior.push_back(k);
      }
      if (!ok) continue;
      std::reverse(interior.begin(), interior.end());
      out.push_back({i, j, interior, leading_monomial(n, i, j, interior)});
    }
  }
  return out;
}

}  // namespace

std::vector<AdmissiblePath> admissible_paths(const SimpleGraph& g, const OracleLimits& limits) {
  const int vars = 2 * g.order();
  if (vars > limits.max_vars || vars > kMaxRingVars)
    throw SizeCapError("graph on " + std::to_string(g.order()) + " vertices needs " +
                       std::to_string(vars) + " ring variables; cap is " +
                       std::to_string(std::min(limits.max_vars, kMaxRingVars)));

  std::vector<AdmissiblePath> out;
  if (is_forest(g)) {
    out = forest_paths(g);
  } else {
    PathSearch search{g, std::vector<VertexMask>(static_cast<std::size_t>(g.order()) + 1, 0), {}, 0, {}, 0};
    for (Vertex v = 1; v <= g.order(); ++v)
      for (Vertex w : g.neighbors(v)) search.nbr[v] |= bit(w);
    for (Vertex i = 1; i <= g.order(); ++i) {
      search.start = i;
      search.path = {i};
      search.on_path = bit(i);
      search.extend(i, g.order() + 1);
    }
    out = std::move(search.out);
  }
  std::sort(out.begin(), out.end(), [](const AdmissiblePath& a, const AdmissiblePath& b) {
    return std::tie(a.i, a.j, a.interior) < std::tie(b.i, b.j, b.interior);
  });
  return out;
}

SquarefreeMonomialIdeal initial_ideal(const SimpleGraph& g, const OracleLimits& limits) {
  std::vector<VarSet> gens;
  for (const auto& p : admissible_paths(g, limits)) gens.push_back(p.monomial);
  return SquarefreeMonomialIdeal(2 * g.order(), std::move(gens));
}

std::string variable_name(int var_index, int n) {
  return var_index <= n ? "x" + std::to_string(var_index) : "y" + std::to_string(var_index - n);
}

std::string monomial_string(VarSet m, int n) {
  if (m == 0) return "1";
  std::string out;
  for (VarSet f = m; f; f &= f - 1) {
    if (!out.empty()) out += "*";
    out += variable_name(std::countr_zero(f) + 1, n);
  }
  return out;
}

}  // namespace beireg
