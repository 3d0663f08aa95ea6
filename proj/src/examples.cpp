#include "beireg/examples.hpp"

#include "beireg/bounds.hpp"
#include "beireg/hochster.hpp"
#include "beireg/jewel.hpp"

namespace beireg {

namespace {

void two_leaves(std::vector<Edge>& edges, Vertex support, Vertex first_leaf) {
  edges.emplace_back(support, first_leaf);
  edges.emplace_back(support, first_leaf + 1);
}

}  // namespace

Tree fig2_tree() {
  std::vector<Edge> e{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {2, 8}};
  for (Vertex s = 3; s <= 8; ++s) two_leaves(e, s, 9 + 2 * (s - 3));
  return Tree(SimpleGraph(20, e));
}

Tree gamma_tree(int d) {
  if (d < 1) throw GraphError("gamma tree needs d >= 1");
  std::vector<Edge> e;
  for (int k = 0; k < d; ++k) {
    Vertex u = 2 + 7 * k;
    e.emplace_back(1, u);
    e.emplace_back(u, u + 1);
    e.emplace_back(u, u + 2);
    two_leaves(e, u + 1, u + 3);
    two_leaves(e, u + 2, u + 5);
  }
  return Tree(SimpleGraph(1 + 7 * d, e));
}

Tree jewel10_tree() {
  std::vector<Edge> e{{1, 2}, {1, 3}, {1, 4}};
  for (Vertex s = 2; s <= 4; ++s) two_leaves(e, s, 5 + 2 * (s - 2));
  return Tree(SimpleGraph(10, e));
}

Tree two_jewel_chain_tree() {
  std::vector<Edge> e{{1, 2}, {2, 3}, {2, 4}, {1, 5}, {1, 6}, {3, 7}, {3, 8}};
  for (Vertex s = 5; s <= 8; ++s) two_leaves(e, s, 9 + 2 * (s - 5));
  return Tree(SimpleGraph(16, e));
}

std::vector<ExampleCheck> fig2_checks() {
  const Tree t = fig2_tree();
  const auto est = estimate(t);
  return {
      {"fig2", "thm_lower", 12, thm_lower(t)},
      {"fig2", "thm_upper", 12, thm_upper(t)},
      {"fig2", "exact", 12, est.exact.value_or(-1)},
  };
}

std::vector<GammaRow> gamma_table(int d_from, int d_to) {
  std::vector<GammaRow> rows;
  for (int d = d_from; d <= d_to; ++d) {
    const Tree t = gamma_tree(d);
    rows.push_back({d, thm_lower(t), thm_upper(t), 5 * d - (d + 1) / 3, 5 * d});
  }
  return rows;
}

std::vector<ExampleCheck> jewel_checks(const FieldSpec& field, const OracleLimits& limits) {
  const Tree t = jewel10_tree();
  const auto prof = jewel_profile(t);
  const int formula = prof.iv + prof.centers.front().d - 1;
  return {
      {"jewel", "one-jewel formula", 6, formula},
      {"jewel", "oracle", formula, oracle_reg(t.graph(), field, limits)},
  };
}

std::vector<ExampleCheck> family_checks(const FieldSpec& field, const OracleLimits& limits) {
  std::vector<ExampleCheck> out;
  const std::pair<int, int> params[] = {{0, 2}, {1, 1}, {2, 0}, {1, 2}};
  for (auto [s, t] : params)
    for (int m = 0; m <= 1; ++m) {
      const auto g = family_gstm_graph(s, t, m);
      out.push_back({"family(s=" + std::to_string(s) + ",t=" + std::to_string(t) + ",m=" + std::to_string(m) + ")",
                     "oracle vs 2s+t", family_gstm_reg(s, t, m), oracle_reg(g, field, limits)});
    }
  return out;
}

}  // namespace beireg
