#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "beireg/graph.hpp"
#include "beireg/jewel.hpp"

namespace beireg {

/// One step of an estimate derivation. Interval steps carry `upper`;
/// exact steps and credits leave it empty.
struct TraceStep {
  std::string rule;
  std::string piece;
  int contribution = 0;
  std::optional<int> upper;

  bool operator==(const TraceStep&) const = default;
};

/// Bounds on reg(S/J_G).
struct RegularityEstimate {
  int lower = 0;
  int upper = 0;
  std::optional<int> exact;
  std::vector<TraceStep> trace;

  bool operator==(const RegularityEstimate&) const = default;
};

struct ExactValue {
  int value = 0;
  std::string rule;
};

/// Rule names used in traces and reports.
namespace rules {
inline constexpr const char* kCorollary = "corollary-exact";
inline constexpr const char* kOneJewel = "one-jewel";
inline constexpr const char* kJewelFree = "jewel-free";
inline constexpr const char* kCaterpillar = "caterpillar";
inline constexpr const char* kEdgeless = "edgeless";
inline constexpr const char* kBounds = "bounds";
inline constexpr const char* kCoinciding = "coinciding-bounds";
inline constexpr const char* kSplit = "split-degree-two";
inline constexpr const char* kTrim = "caterpillar-trim";
inline constexpr const char* kSum = "gluing-sum";
}  // namespace rules

/// (longest induced path length, n - 1).
std::pair<int, int> matsuda_murai_bounds(const Tree& t);

int thm_upper(const JewelProfile& prof);
int thm_upper(const Tree& t);
/// iv + 1 + D_G - 3s - mu + p. Also evaluates the form with sum(s_i - 1) and
/// throws std::logic_error if the two disagree.
int thm_lower(const JewelProfile& prof);
int thm_lower(const Tree& t);

/// Value of the first applicable closed-form rule, in the order corollary,
/// one-jewel, jewel-free, caterpillar. Every other applicable rule is
/// evaluated too; disagreement throws std::logic_error.
std::optional<ExactValue> exact_rules(const Tree& t);

/// reg for the family of s stars (arms with >= 3 leaves), t cliques
/// (>= 3 vertices) and m whiskers glued at one vertex: 2s + t.
/// Throws std::invalid_argument when s + t < 2.
int family_gstm_reg(int s, int t, int m);
/// Member of that family with the given arm and clique sizes; the shared
/// vertex is 1.
SimpleGraph family_gstm_graph(int s, int t, int m, int star_leaves = 3, int clique_size = 3);

/// Split at degree-two vertices, trim attached caterpillars, then apply the
/// exact rules or the theorem bounds intersected with the path bounds on
/// each piece, and add everything up.
RegularityEstimate estimate(const Tree& t);

}  // namespace beireg
