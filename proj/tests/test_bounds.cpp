#include <doctest.h>

#include "beireg/bounds.hpp"
#include "beireg/examples.hpp"
#include "beireg/prufer.hpp"

using namespace beireg;

TEST_CASE("path bounds") {
  CHECK(matsuda_murai_bounds(Tree(SimpleGraph::path(4))) == std::pair{3, 3});
  CHECK(matsuda_murai_bounds(Tree(SimpleGraph::star(3))) == std::pair{2, 3});
  CHECK(matsuda_murai_bounds(fig2_tree()) == std::pair{5, 19});
  CHECK(matsuda_murai_bounds(gamma_tree(3)) == std::pair{6, 21});
}

TEST_CASE("theorem bounds on the worked examples") {
  CHECK(thm_upper(fig2_tree()) == 12);
  CHECK(thm_lower(fig2_tree()) == 12);
  CHECK(thm_lower(jewel10_tree()) == 6);
  CHECK(thm_upper(jewel10_tree()) == 6);
  CHECK(thm_lower(gamma_tree(3)) == 12);
  CHECK(thm_upper(gamma_tree(3)) == 14);
  CHECK(thm_lower(two_jewel_chain_tree()) == 9);
  CHECK(thm_upper(two_jewel_chain_tree()) == 10);
}

TEST_CASE("gamma upper bound closed form") {
  for (int d = 3; d <= 12; ++d) CHECK(thm_upper(gamma_tree(d)) == 5 * d - (d + 1) / 3);
}

TEST_CASE("jewel-free collapse") {
  for (int n = 2; n <= 9; ++n) {
    const Tree t = random_tree(n, static_cast<std::uint64_t>(n));
    const int iv = internal_vertex_count(t.graph());
    CHECK(thm_lower(t) == iv + 1);
    CHECK(thm_upper(t) == iv + 1);
  }
}

TEST_CASE("exact rules") {
  SUBCASE("path on six vertices") {
    auto ex = exact_rules(Tree(SimpleGraph::path(6)));
    REQUIRE(ex);
    CHECK(ex->value == 5);
  }
  SUBCASE("one jewel") {
    auto ex = exact_rules(jewel10_tree());
    REQUIRE(ex);
    CHECK(ex->value == 6);
    CHECK(ex->rule == rules::kCorollary);
  }
  SUBCASE("two adjacent centers") {
    auto ex = exact_rules(fig2_tree());
    REQUIRE(ex);
    CHECK(ex->value == 12);
    CHECK(ex->rule == rules::kCorollary);
  }
  SUBCASE("mu positive and a long component leave nothing exact") {
    CHECK_FALSE(exact_rules(two_jewel_chain_tree()).has_value());
    CHECK_FALSE(exact_rules(gamma_tree(3)).has_value());
  }
  SUBCASE("single vertex") {
    auto ex = exact_rules(Tree(SimpleGraph(1)));
    REQUIRE(ex);
    CHECK(ex->value == 0);
  }
}

TEST_CASE("family of stars and cliques at a point") {
  CHECK(family_gstm_reg(2, 0, 0) == 4);
  CHECK(family_gstm_reg(0, 2, 1) == 2);
  CHECK(family_gstm_reg(3, 0, 0) == 6);
  CHECK_THROWS_AS(family_gstm_reg(1, 0, 3), std::invalid_argument);
  const auto g = family_gstm_graph(3, 0, 0);
  const Tree t(g);
  CHECK(t.order() == 10);
  CHECK(exact_rules(t)->value == 6);
  const auto h = family_gstm_graph(1, 2, 1);
  CHECK(h.order() == 1 + 3 + 2 * 2 + 1);
  CHECK(h.degree(1) == 1 + 4 + 1);
}

TEST_CASE("estimate pipeline") {
  SUBCASE("figure tree") {
    auto est = estimate(fig2_tree());
    CHECK(est.exact == 12);
    REQUIRE(est.trace.size() == 1);
    CHECK(est.trace[0].rule == rules::kCorollary);
  }
  SUBCASE("path splits into edges") {
    auto est = estimate(Tree(SimpleGraph::path(4)));
    CHECK(est.exact == 3);
    int edges = 0;
    for (const auto& s : est.trace) edges += s.rule != rules::kSplit && s.rule != rules::kSum;
    CHECK(edges == 3);
  }
  SUBCASE("two-jewel chain stays an interval") {
    auto est = estimate(two_jewel_chain_tree());
    CHECK(est.lower == 9);
    CHECK(est.upper == 10);
    CHECK_FALSE(est.exact.has_value());
  }
  SUBCASE("gamma tree") {
    auto est = estimate(gamma_tree(3));
    CHECK(est.lower == 12);
    CHECK(est.upper == 14);
    CHECK_FALSE(est.exact.has_value());
  }
  SUBCASE("caterpillar credit") {
    std::vector<Edge> e{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10}};
    auto est = estimate(Tree(SimpleGraph(10, e)));
    CHECK(est.exact == 5);
  }
  SUBCASE("single vertex") { CHECK(estimate(Tree(SimpleGraph(1))).exact == 0); }
}

TEST_CASE("upper bound dominates lower bound on random trees") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 2000; ++k) {
    const Tree t = random_tree(uniform_int(rng, 1, 40), rng);
    const auto prof = jewel_profile(t);
    CHECK(thm_upper(prof) >= thm_lower(prof));
    const auto est = estimate(t);
    CHECK(est.lower <= est.upper);
    if (est.exact) {
      CHECK(*est.exact == est.lower);
      CHECK(*est.exact == est.upper);
    }
  }
}

TEST_CASE("estimate is additive over degree-two pieces") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 300; ++k) {
    const Tree t = random_tree(uniform_int(rng, 2, 30), rng);
    const auto est = estimate(t);
    int lo = 0, hi = 0;
    for (const auto& piece : split_at_degree_two(t)) {
      const auto e = estimate(piece.tree);
      lo += e.lower;
      hi += e.upper;
    }
    CHECK(est.lower == lo);
    CHECK(est.upper == hi);
  }
}
