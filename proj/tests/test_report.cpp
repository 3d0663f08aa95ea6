#include <doctest.h>

#include "beireg/examples.hpp"
#include "beireg/prufer.hpp"
#include "beireg/report.hpp"

using namespace beireg;
using nlohmann::json;

TEST_CASE("analyze the figure tree") {
  const auto r = analyze(fig2_tree());
  CHECK(r.n == 20);
  CHECK(r.bounds.thm_lower == 12);
  CHECK(r.bounds.thm_upper == 12);
  CHECK(r.bounds.iv_lower == 9);
  CHECK(r.bounds.mm_lower == 5);
  CHECK(r.bounds.mm_upper == 19);
  CHECK(r.estimate.exact == 12);
}

TEST_CASE("analyze report invariants") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const auto r = analyze(random_tree(uniform_int(rng, 1, 35), rng));
    CHECK(r.bounds.iv_lower == r.profile.iv + 1);
    CHECK(r.bounds.mm_lower <= r.bounds.thm_upper);
    CHECK(r.estimate.lower <= r.estimate.upper);
  }
}

TEST_CASE("JSON round-trips") {
  std::mt19937_64 rng(4);
  std::vector<Tree> trees{fig2_tree(), gamma_tree(3), two_jewel_chain_tree(), Tree(SimpleGraph(1))};
  for (int k = 0; k < 50; ++k) trees.push_back(random_tree(uniform_int(rng, 2, 30), rng));
  for (const auto& t : trees) {
    const auto r = analyze(t);
    const json j = r;
    const auto back = json::parse(j.dump()).get<AnalyzeReport>();
    CHECK(back == r);
    CHECK(json(back).dump() == j.dump());
  }
}

TEST_CASE("JSON schema keys") {
  const json j = analyze(two_jewel_chain_tree());
  for (const char* key : {"n", "profile", "bounds", "estimate", "trace"}) CHECK(j.contains(key));
  for (const char* key : {"iv", "centers", "D_G", "s", "components", "p", "e_G", "C_G", "mu"})
    CHECK(j["profile"].contains(key));
  for (const char* key : {"mm_lower", "mm_upper", "iv_lower", "thm_lower", "thm_upper"})
    CHECK(j["bounds"].contains(key));
  CHECK(j["estimate"]["exact"].is_null());
  CHECK(j["profile"]["C_G"] == json::array({2}));
}

TEST_CASE("text output") {
  const auto text = format_analyze(analyze(fig2_tree()));
  CHECK(text.find("exact 12") != std::string::npos);
  CHECK(text.find("1 (D=4), 2 (D=4)") != std::string::npos);
}

TEST_CASE("DOT export") {
  const auto dot = export_dot(fig2_tree());
  CHECK(dot.rfind("graph tree {", 0) == 0);
  std::size_t colored = 0;
  for (std::size_t pos = 0; (pos = dot.find("fillcolor=gold", pos)) != std::string::npos; ++pos) ++colored;
  CHECK(colored == 2);
  CHECK(dot.find("D=4") != std::string::npos);
  CHECK(dot.find("1 -- 2;") != std::string::npos);

  const auto chain = export_dot(two_jewel_chain_tree());
  CHECK(chain.find("2 [shape=box") != std::string::npos);
}

TEST_CASE("Betti JSON") {
  const auto ideal = initial_ideal(SimpleGraph::path(3));
  const auto r = hochster_regularity(ideal, {}, {}, true);
  const auto j = betti_to_json(*r.table, 3);
  CHECK(j["regularity"] == 2);
  bool found = false;
  for (const auto& e : j["entries"])
    if (e["i"] == 1 && e["support"] == json::array({"x1", "y2"})) found = true;
  CHECK(found);
}
