#include "beireg/homology.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace beireg {

namespace {

using Column = std::vector<std::pair<int, long long>>;

long long mod_pow(long long base, long long exp, long long p) {
  long long result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

long long mod_inverse(long long a, long long p) { return mod_pow(a, p - 2, p); }

// target -= factor * source, entries sorted by row.
void axpy(Column& target, const Column& source, long long factor, long long p) {
  Column out;
  out.reserve(target.size() + source.size());
  std::size_t a = 0, b = 0;
  while (a < target.size() || b < source.size()) {
    if (b == source.size() || (a < target.size() && target[a].first < source[b].first)) {
      out.push_back(target[a++]);
    } else if (a == target.size() || source[b].first < target[a].first) {
      long long v = (p - factor * source[b].second % p) % p;
      out.emplace_back(source[b].first, v);
      ++b;
    } else {
      long long v = ((target[a].second - factor * source[b].second) % p + p) % p;
      if (v != 0) out.emplace_back(target[a].first, v);
      ++a;
      ++b;
    }
  }
  target.swap(out);
}

std::vector<VarSet> relevant(VarSet vertices, std::span<const VarSet> nonfaces) {
  std::vector<VarSet> out;
  for (VarSet e : nonfaces)
    if ((e & ~vertices) == 0) out.push_back(e);
  return out;
}

// Drops non-minimal members.
std::vector<VarSet> minimalize(std::vector<VarSet> edges) {
  std::sort(edges.begin(), edges.end(), [](VarSet a, VarSet b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<VarSet> out;
  for (VarSet e : edges)
    if (std::none_of(out.begin(), out.end(), [e](VarSet f) { return (f & ~e) == 0; })) out.push_back(e);
  return out;
}

// Faces grouped by vertex count, each group sorted.
std::vector<std::vector<VarSet>> enumerate_faces(VarSet vertices, const std::vector<VarSet>& edges) {
  std::vector<int> order;
  for (VarSet f = vertices; f; f &= f - 1) order.push_back(std::countr_zero(f));
  std::vector<std::vector<VarSet>> through(64);
  for (VarSet e : edges)
    for (VarSet f = e; f; f &= f - 1) through[std::countr_zero(f)].push_back(e);

  std::vector<std::vector<VarSet>> faces(order.size() + 1);
  // Depth-first over increasing vertex order.
  struct Frame {
    VarSet face;
    std::size_t next;
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    auto [face, next] = stack.back();
    stack.pop_back();
    faces[std::popcount(face)].push_back(face);
    for (std::size_t k = next; k < order.size(); ++k) {
      int v = order[k];
      VarSet cand = face | (VarSet{1} << v);
      bool ok = std::none_of(through[v].begin(), through[v].end(),
                             [cand](VarSet e) { return (e & ~cand) == 0; });
      if (ok) stack.push_back({cand, k + 1});
    }
  }
  for (auto& level : faces) std::sort(level.begin(), level.end());
  while (faces.size() > 1 && faces.back().empty()) faces.pop_back();
  return faces;
}

HomologyDims homology_from_faces(const std::vector<std::vector<VarSet>>& faces, int num_vertices,
                                 std::uint32_t p) {
  // rank[k]: rank of the boundary from k-vertex faces to (k-1)-vertex faces.
  std::vector<std::size_t> rank(faces.size() + 1, 0);
  for (std::size_t k = 1; k < faces.size(); ++k) {
    const auto& rows = faces[k - 1];
    std::vector<Column> cols;
    cols.reserve(faces[k].size());
    for (VarSet face : faces[k]) {
      Column col;
      int position = 0;
      for (VarSet f = face; f; f &= f - 1, ++position) {
        VarSet sub = face & ~(f & -f);
        int row = static_cast<int>(std::lower_bound(rows.begin(), rows.end(), sub) - rows.begin());
        col.emplace_back(row, position % 2 == 0 ? 1 : static_cast<long long>(p) - 1);
      }
      std::sort(col.begin(), col.end());
      cols.push_back(std::move(col));
    }
    rank[k] = sparse_rank(std::move(cols), p);
  }
  HomologyDims dims(static_cast<std::size_t>(num_vertices) + 1, 0);
  for (std::size_t k = 0; k < faces.size(); ++k)
    dims[k] = static_cast<long long>(faces[k].size()) - static_cast<long long>(rank[k]) -
              static_cast<long long>(rank[k + 1]);
  return dims;
}

HomologyDims zeros(VarSet vertices) { return HomologyDims(static_cast<std::size_t>(std::popcount(vertices)) + 1, 0); }

HomologyDims reduce(VarSet vertices, std::vector<VarSet> edges, std::uint32_t p);

// Link of v: faces F with F + v a face.
std::pair<VarSet, std::vector<VarSet>> link_of(VarSet vertices, const std::vector<VarSet>& edges, VarSet v) {
  std::vector<VarSet> link;
  link.reserve(edges.size());
  for (VarSet e : edges) link.push_back(e & ~v);
  return {vertices & ~v, minimalize(std::move(link))};
}

HomologyDims fit(HomologyDims dims, VarSet vertices) {
  dims.resize(static_cast<std::size_t>(std::popcount(vertices)) + 1, 0);
  return dims;
}

HomologyDims reduce(VarSet vertices, std::vector<VarSet> edges, std::uint32_t p) {
  const VarSet original = vertices;
  // Singleton non-faces are not vertices of the complex.
  VarSet singles = 0;
  for (VarSet e : edges)
    if (std::popcount(e) == 1) singles |= e;
  if (singles) {
    vertices &= ~singles;
    std::erase_if(edges, [singles](VarSet e) { return (e & singles) != 0; });
  }
  if (vertices == 0) {
    HomologyDims dims = zeros(original);
    dims[0] = 1;
    return dims;
  }

  VarSet cover = 0;
  for (VarSet e : edges) cover |= e;
  if (vertices & ~cover) return zeros(original);  // cone

  // Connected components of the hypergraph give a join.
  {
    VarSet first = vertices & -vertices;
    VarSet comp = first;
    bool grew = true;
    while (grew) {
      grew = false;
      for (VarSet e : edges)
        if ((e & comp) && (e & ~comp)) {
          comp |= e;
          grew = true;
        }
    }
    if (comp != vertices) {
      std::vector<VarSet> a, b;
      for (VarSet e : edges) ((e & comp) ? a : b).push_back(e);
      HomologyDims da = reduce(comp, std::move(a), p);
      HomologyDims db = reduce(vertices & ~comp, std::move(b), p);
      HomologyDims out = zeros(original);
      for (std::size_t i = 0; i < da.size(); ++i)
        for (std::size_t j = 0; j < db.size(); ++j)
          if (da[i] && db[j] && i + j < out.size()) out[i + j] += da[i] * db[j];
      return out;
    }
  }

  // Deletion of v is a cone: the complex is the suspension of the link.
  for (VarSet f = vertices; f; f &= f - 1) {
    VarSet v = f & -f;
    VarSet del_cover = 0;
    for (VarSet e : edges)
      if (!(e & v)) del_cover |= e;
    if ((vertices & ~v) & ~del_cover) {
      auto [lv, le] = link_of(vertices, edges, v);
      HomologyDims inner = reduce(lv, std::move(le), p);
      HomologyDims out = zeros(original);
      for (std::size_t k = 0; k < inner.size() && k + 1 < out.size(); ++k) out[k + 1] = inner[k];
      return out;
    }
  }

  // Link of v is a cone: deleting v is a homotopy equivalence.
  for (VarSet f = vertices; f; f &= f - 1) {
    VarSet v = f & -f;
    auto [lv, le] = link_of(vertices, edges, v);
    VarSet link_singles = 0, link_cover = 0;
    for (VarSet e : le) {
      if (std::popcount(e) == 1) link_singles |= e;
    }
    for (VarSet e : le)
      if (!(e & link_singles)) link_cover |= e;
    VarSet link_vertices = lv & ~link_singles;
    if (link_vertices && (link_vertices & ~link_cover)) {
      std::erase_if(edges, [v](VarSet e) { return (e & v) != 0; });
      return fit(reduce(vertices & ~v, std::move(edges), p), original);
    }
  }

  return fit(homology_from_faces(enumerate_faces(vertices, edges), std::popcount(vertices), p), original);
}

}  // namespace

std::size_t sparse_rank(std::vector<std::vector<std::pair<int, long long>>> columns, std::uint32_t p) {
  const long long mod = p;
  std::unordered_map<int, std::size_t> pivot_column;  // lowest row -> reduced column
  std::vector<Column> reduced;
  std::size_t rank = 0;
  for (auto& col : columns) {
    for (auto& [row, value] : col) value = ((value % mod) + mod) % mod;
    std::erase_if(col, [](const auto& entry) { return entry.second == 0; });
    while (!col.empty()) {
      int low = col.back().first;
      auto it = pivot_column.find(low);
      if (it == pivot_column.end()) break;
      const Column& pivot = reduced[it->second];
      long long factor = col.back().second * mod_inverse(pivot.back().second, mod) % mod;
      axpy(col, pivot, factor, mod);
    }
    if (!col.empty()) {
      pivot_column.emplace(col.back().first, reduced.size());
      reduced.push_back(std::move(col));
      ++rank;
    }
  }
  return rank;
}

std::vector<long long> face_counts(VarSet vertices, std::span<const VarSet> nonfaces) {
  auto faces = enumerate_faces(vertices, relevant(vertices, nonfaces));
  std::vector<long long> out(static_cast<std::size_t>(std::popcount(vertices)) + 1, 0);
  for (std::size_t k = 0; k < faces.size(); ++k) out[k] = static_cast<long long>(faces[k].size());
  return out;
}

HomologyDims reduced_homology_direct(VarSet vertices, std::span<const VarSet> nonfaces,
                                     const FieldSpec& field) {
  auto faces = enumerate_faces(vertices, relevant(vertices, nonfaces));
  return homology_from_faces(faces, std::popcount(vertices), field.characteristic());
}

HomologyDims reduced_homology(VarSet vertices, std::span<const VarSet> nonfaces, const FieldSpec& field) {
  return reduce(vertices, minimalize(relevant(vertices, nonfaces)), field.characteristic());
}

}  // namespace beireg
