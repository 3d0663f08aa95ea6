#pragma once

#include <optional>
#include <vector>

#include "beireg/graph.hpp"

namespace beireg {

/// A generalized jewel center c together with D(c) = |N^{>=3}(c)|.
struct JewelCenter {
  Vertex vertex = 0;
  int d = 0;
  bool operator==(const JewelCenter&) const = default;
};

/// Jewel invariants of a tree.
///
/// `components` holds the vertex counts of the connected components of the
/// subgraph induced on the centers, ordered by smallest center label.
/// `e_g` counts the components with exactly two vertices; `c_g` lists the
/// degree-three vertices with D = 2 whose two high-degree neighbours are
/// both centers.
struct JewelProfile {
  int iv = 0;
  std::vector<JewelCenter> centers;
  int d_g = 0;
  int s = 0;
  std::vector<int> components;
  int p = 0;
  int e_g = 0;
  std::vector<Vertex> c_g;
  int mu = 0;

  bool operator==(const JewelProfile&) const = default;
};

/// One star that replaced an attached caterpillar. Vertex labels refer to
/// the working labels of trim_caterpillars (original labels for original
/// vertices, fresh labels above n for inserted star vertices).
struct CaterpillarReplacement {
  Vertex attachment = 0;
  int length = 0;                   // spine length l of the removed caterpillar
  std::vector<int> spine_degrees;   // deg(v_1), ..., deg(v_{l-1}) before the trim
  int star_size = 0;                // t
};

struct CaterpillarTrim {
  Tree trimmed;
  int length_credit = 0;  // sum of (l - 2)
  std::vector<CaterpillarReplacement> replaced;
  /// labels[k - 1]: working label of vertex k of `trimmed`.
  std::vector<Vertex> labels;
};

/// Internal vertices: clique degree at least two, i.e. tree degree >= 2.
int internal_vertex_count(const SimpleGraph& g);

/// {u in N(v) : deg(u) >= i}.
std::vector<Vertex> n_geq(const SimpleGraph& g, Vertex v, int i);
inline int d_value(const SimpleGraph& g, Vertex v) { return static_cast<int>(n_geq(g, v, 3).size()); }

JewelProfile jewel_profile(const Tree& t);

/// Subgraph induced on the union of N[u] over the supporting vertices of c.
/// Throws GraphError when D(c) < 3.
LabelledGraph jewel_subgraph(const Tree& t, Vertex c);

/// Spine length when the internal vertices induce a path (or nothing).
std::optional<int> is_caterpillar(const Tree& t);

/// Replaces every caterpillar attached at a vertex v with spine
/// v = v_l, ..., v_0, l >= 3 and deg(v_i) >= 3 (0 < i < l) by a star K_{1,t}
/// glued at one of its leaves, t = sum deg(v_i) - 2l + 3, until none is left.
/// Regularity drops by exactly l - 2 per replacement.
CaterpillarTrim trim_caterpillars(const Tree& t);

}  // namespace beireg
