#include "beireg/report.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace beireg {

using nlohmann::json;

AnalyzeReport analyze(const Tree& t) {
  AnalyzeReport r;
  r.n = t.order();
  r.profile = jewel_profile(t);
  const auto [mm_lo, mm_hi] = matsuda_murai_bounds(t);
  r.bounds = {mm_lo, mm_hi, r.profile.iv + 1, thm_lower(r.profile), thm_upper(r.profile)};
  r.estimate = estimate(t);
  return r;
}

void to_json(json& j, const JewelProfile& p) {
  json centers = json::array();
  for (const auto& c : p.centers) centers.push_back({{"vertex", c.vertex}, {"D", c.d}});
  j = json{{"iv", p.iv},
           {"centers", centers},
           {"D_G", p.d_g},
           {"s", p.s},
           {"components", p.components},
           {"p", p.p},
           {"e_G", p.e_g},
           {"C_G", p.c_g},
           {"mu", p.mu}};
}

void from_json(const json& j, JewelProfile& p) {
  p.iv = j.at("iv").get<int>();
  p.centers.clear();
  for (const auto& c : j.at("centers")) p.centers.push_back({c.at("vertex").get<int>(), c.at("D").get<int>()});
  p.d_g = j.at("D_G").get<int>();
  p.s = j.at("s").get<int>();
  p.components = j.at("components").get<std::vector<int>>();
  p.p = j.at("p").get<int>();
  p.e_g = j.at("e_G").get<int>();
  p.c_g = j.at("C_G").get<std::vector<Vertex>>();
  p.mu = j.at("mu").get<int>();
}

void to_json(json& j, const TraceStep& s) {
  j = json{{"rule", s.rule}, {"piece", s.piece}, {"contribution", s.contribution}};
  j["upper"] = s.upper ? json(*s.upper) : json(nullptr);
}

void from_json(const json& j, TraceStep& s) {
  s.rule = j.at("rule").get<std::string>();
  s.piece = j.at("piece").get<std::string>();
  s.contribution = j.at("contribution").get<int>();
  s.upper = j.at("upper").is_null() ? std::nullopt : std::optional<int>(j.at("upper").get<int>());
}

void to_json(json& j, const AnalyzeReport& r) {
  j = json{{"n", r.n},
           {"profile", r.profile},
           {"bounds",
            {{"mm_lower", r.bounds.mm_lower},
             {"mm_upper", r.bounds.mm_upper},
             {"iv_lower", r.bounds.iv_lower},
             {"thm_lower", r.bounds.thm_lower},
             {"thm_upper", r.bounds.thm_upper}}},
           {"estimate",
            {{"lower", r.estimate.lower},
             {"upper", r.estimate.upper},
             {"exact", r.estimate.exact ? json(*r.estimate.exact) : json(nullptr)}}},
           {"trace", r.estimate.trace}};
}

void from_json(const json& j, AnalyzeReport& r) {
  r.n = j.at("n").get<int>();
  r.profile = j.at("profile").get<JewelProfile>();
  const auto& b = j.at("bounds");
  r.bounds = {b.at("mm_lower").get<int>(), b.at("mm_upper").get<int>(), b.at("iv_lower").get<int>(),
              b.at("thm_lower").get<int>(), b.at("thm_upper").get<int>()};
  const auto& e = j.at("estimate");
  r.estimate.lower = e.at("lower").get<int>();
  r.estimate.upper = e.at("upper").get<int>();
  r.estimate.exact = e.at("exact").is_null() ? std::nullopt : std::optional<int>(e.at("exact").get<int>());
  r.estimate.trace = j.at("trace").get<std::vector<TraceStep>>();
}

std::string format_analyze(const AnalyzeReport& r) {
  std::ostringstream out;
  const auto& p = r.profile;
  out << "vertices            " << r.n << "\n";
  out << "internal vertices   " << p.iv << "\n";
  out << "jewel centers       ";
  if (p.centers.empty()) out << "none";
  for (std::size_t k = 0; k < p.centers.size(); ++k)
    out << (k ? ", " : "") << p.centers[k].vertex << " (D=" << p.centers[k].d << ")";
  out << "\n";
  out << "D_G / s / p / e_G   " << p.d_g << " / " << p.s << " / " << p.p << " / " << p.e_g << "\n";
  out << "component sizes     ";
  for (std::size_t k = 0; k < p.components.size(); ++k) out << (k ? " " : "") << p.components[k];
  out << (p.components.empty() ? "-" : "") << "\n";
  out << "C_G (mu)            ";
  for (std::size_t k = 0; k < p.c_g.size(); ++k) out << (k ? " " : "") << p.c_g[k];
  out << (p.c_g.empty() ? "-" : "") << " (" << p.mu << ")\n\n";

  out << "bound               value\n";
  out << "path lower (l)      " << r.bounds.mm_lower << "\n";
  out << "path upper (n-1)    " << r.bounds.mm_upper << "\n";
  out << "iv + 1              " << r.bounds.iv_lower << "\n";
  out << "jewel lower         " << r.bounds.thm_lower << "\n";
  out << "jewel upper         " << r.bounds.thm_upper << "\n\n";

  out << "estimate            [" << r.estimate.lower << ", " << r.estimate.upper << "]";
  if (r.estimate.exact) out << "  exact " << *r.estimate.exact;
  out << "\n";
  for (const auto& s : r.estimate.trace) {
    out << "  " << s.rule << " " << s.piece << " -> " << s.contribution;
    if (s.upper) out << ".." << *s.upper;
    out << "\n";
  }
  return out.str();
}

json betti_to_json(const BettiTable& table, int graph_order) {
  json entries = json::array();
  for (const auto& [key, dim] : table.entries) {
    std::vector<std::string> support;
    for (VarSet f = key.second; f; f &= f - 1)
      support.push_back(variable_name(std::countr_zero(f) + 1, graph_order));
    entries.push_back({{"i", key.first}, {"j", std::popcount(key.second)}, {"support", support}, {"dim", dim}});
  }
  json graded = json::array();
  for (const auto& [key, dim] : table.graded())
    graded.push_back({{"i", key.first}, {"j", key.second}, {"dim", dim}});
  return json{{"num_vars", table.num_vars},
              {"regularity", table.regularity},
              {"graded", graded},
              {"entries", entries}};
}

std::string export_dot(const Tree& t) {
  const auto prof = jewel_profile(t);
  const auto& g = t.graph();
  std::ostringstream out;
  out << "graph tree {\n  node [shape=circle];\n";
  for (Vertex v = 1; v <= g.order(); ++v) {
    auto c = std::find_if(prof.centers.begin(), prof.centers.end(),
                          [v](const JewelCenter& jc) { return jc.vertex == v; });
    bool in_cg = std::find(prof.c_g.begin(), prof.c_g.end(), v) != prof.c_g.end();
    out << "  " << v;
    if (c != prof.centers.end()) {
      out << " [label=\"" << v << "\\nD=" << c->d << "\", style=filled, fillcolor=gold]";
    } else if (in_cg) {
      out << " [shape=box, style=dashed]";
    }
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace beireg
