#include "beireg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "beireg/bounds.hpp"
#include "beireg/hochster.hpp"
#include "beireg/jewel.hpp"
#include "beireg/prufer.hpp"

namespace beireg {

namespace {

std::string str(int v) { return std::to_string(v); }

struct Recorder {
  std::string code;
  std::vector<VerifyFailure>& out;
  void fail(std::string relation, std::string observed) {
    out.push_back({code, std::move(relation), std::move(observed)});
  }
};

bool is_center(const JewelProfile& p, Vertex v) {
  return std::any_of(p.centers.begin(), p.centers.end(), [v](const JewelCenter& c) { return c.vertex == v; });
}

// Every maximum-length path, as (start, end) pairs with start < end.
std::vector<std::pair<Vertex, Vertex>> all_spines(const Tree& t) {
  const int n = t.order();
  std::vector<std::pair<Vertex, Vertex>> ends;
  int best = -1;
  for (Vertex a = 1; a <= n; ++a) {
    auto d = distances_from(t.graph(), a);
    for (Vertex b = a + 1; b <= n; ++b) {
      if (d[b] > best) {
        best = d[b];
        ends.clear();
      }
      if (d[b] == best) ends.emplace_back(a, b);
    }
  }
  return ends;
}

}  // namespace

std::string tree_code(const SimpleGraph& g) {
  std::ostringstream out;
  out << "n=" << g.order();
  for (auto [u, v] : g.edges()) out << ' ' << u << '-' << v;
  return out.str();
}

std::vector<VerifyFailure> formula_checks(const Tree& t) {
  std::vector<VerifyFailure> out;
  Recorder rec{tree_code(t.graph()), out};
  const auto prof = jewel_profile(t);
  const int lo = thm_lower(prof), hi = thm_upper(prof);
  const auto [mm_lo, mm_hi] = matsuda_murai_bounds(t);

  if (hi < lo) rec.fail("thm_upper >= thm_lower", str(hi) + " < " + str(lo));
  if (hi < prof.iv + 1) rec.fail("thm_upper >= iv+1", str(hi) + " < " + str(prof.iv + 1));
  if (hi < mm_lo) rec.fail("thm_upper >= spine length", str(hi) + " < " + str(mm_lo));
  if (prof.s == 0 && (lo != prof.iv + 1 || hi != prof.iv + 1))
    rec.fail("jewel-free: thm bounds = iv+1", str(lo) + ", " + str(hi));

  const auto est = estimate(t);
  if (est.lower > est.upper) rec.fail("estimate lower <= upper", str(est.lower) + " > " + str(est.upper));
  if (est.exact && (*est.exact != est.lower || *est.exact != est.upper))
    rec.fail("estimate exact = lower = upper", str(*est.exact));
  if (auto ex = exact_rules(t); ex && (!est.exact || *est.exact != ex->value))
    rec.fail("estimate agrees with " + ex->rule, "rule " + str(ex->value) + ", estimate [" + str(est.lower) +
                                                       ", " + str(est.upper) + "]");

  if (prof.s == 1) {
    const Vertex c = prof.centers.front().vertex;
    for (Vertex v = 1; v <= t.order(); ++v)
      if (v != c && d_value(t.graph(), v) > 2) rec.fail("one jewel: D(v) <= 2 off the center", "D(" + str(v) + ")");
  }

  // Degree-two split: iv gains one per cut, D_G and s add up.
  const auto pieces = split_at_degree_two(t);
  int iv_sum = 0, dg_sum = 0, s_sum = 0;
  std::set<Vertex> piece_centers;
  for (const auto& piece : pieces) {
    const auto pp = jewel_profile(piece.tree);
    iv_sum += pp.iv;
    dg_sum += pp.d_g;
    s_sum += pp.s;
    for (const auto& c : pp.centers) piece_centers.insert(piece.labels[c.vertex - 1]);
  }
  const int cuts = static_cast<int>(pieces.size()) - 1;
  if (iv_sum + cuts != prof.iv) rec.fail("split: iv = sum iv + cuts", str(iv_sum + cuts) + " vs " + str(prof.iv));
  if (dg_sum != prof.d_g) rec.fail("split: D_G additive", str(dg_sum) + " vs " + str(prof.d_g));
  if (s_sum != prof.s) rec.fail("split: s additive", str(s_sum) + " vs " + str(prof.s));
  std::set<Vertex> centers;
  for (const auto& c : prof.centers) centers.insert(c.vertex);
  if (piece_centers != centers) rec.fail("split: centers preserved", "center sets differ");

  // Trim keeps every surviving original vertex's D and the center set.
  const auto trim = trim_caterpillars(t);
  const auto tprof = jewel_profile(trim.trimmed);
  std::set<Vertex> trimmed_centers;
  for (const auto& c : tprof.centers) trimmed_centers.insert(trim.labels[c.vertex - 1]);
  if (trimmed_centers != centers) rec.fail("trim: centers preserved", "center sets differ");
  for (Vertex k = 1; k <= trim.trimmed.order(); ++k) {
    const Vertex orig = trim.labels[k - 1];
    if (orig <= t.order() && d_value(trim.trimmed.graph(), k) != d_value(t.graph(), orig))
      rec.fail("trim: D preserved", "vertex " + str(orig));
  }
  for (const auto& r : trim.replaced)
    if (r.star_size < r.length || r.length < 3)
      rec.fail("trim: t >= l >= 3", "l=" + str(r.length) + " t=" + str(r.star_size));

  bool has_degree_two = false;
  for (Vertex v = 1; v <= t.order(); ++v) has_degree_two |= t.degree(v) == 2;
  if (prof.s >= 1 && !has_degree_two && trim.length_credit == 0) {
    for (auto [a, b] : all_spines(t)) {
      const auto path = tree_path(t, a, b);
      const int l = static_cast<int>(path.size()) - 1;
      if (l < 4) {
        rec.fail("spine centers: l >= 4", "l=" + str(l));
        continue;
      }
      if (!is_center(prof, path[2]) || !is_center(prof, path[l - 2]))
        rec.fail("spine centers: v_2, v_{l-2} are centers", "spine " + str(a) + ".." + str(b));
    }
  }
  return out;
}

std::vector<VerifyFailure> oracle_checks(const Tree& t, const VerifyOptions& opts, std::uint64_t pick,
                                         std::vector<VerifyFailure>* divergences) {
  std::vector<VerifyFailure> out;
  Recorder rec{tree_code(t.graph()), out};
  const auto& g = t.graph();
  auto reg = [&](const SimpleGraph& h) { return oracle_reg(h, opts.field, opts.limits); };
  const int r = reg(g);
  if (t.order() == 1) {
    if (r != 0) rec.fail("single vertex: reg = 0", str(r));
    return out;
  }
  const auto prof = jewel_profile(t);

  const int lo = thm_lower(prof), hi = thm_upper(prof);
  if (r < lo || r > hi)
    rec.fail("thm_lower <= reg <= thm_upper", str(lo) + " <= " + str(r) + " <= " + str(hi));
  const auto [mm_lo, mm_hi] = matsuda_murai_bounds(t);
  if (r < mm_lo || r > mm_hi)
    rec.fail("spine <= reg <= n-1", str(mm_lo) + " <= " + str(r) + " <= " + str(mm_hi));
  const auto est = estimate(t);
  if (r < est.lower || r > est.upper)
    rec.fail("estimate contains reg", "[" + str(est.lower) + ", " + str(est.upper) + "] vs " + str(r));
  if (auto ex = exact_rules(t); ex && ex->value != r)
    rec.fail("exact rule " + ex->rule, str(ex->value) + " vs " + str(r));
  if ((r == prof.iv + 1) != (prof.s == 0))
    rec.fail("reg = iv+1 iff jewel-free", "reg " + str(r) + ", iv " + str(prof.iv) + ", s " + str(prof.s));

  // Pendant-edge recursion.
  for (auto e : g.edges()) {
    if (t.degree(e.first) != 1 && t.degree(e.second) != 1) continue;
    const auto minus = delete_edge(g, e);
    const int a = reg(minus), b = reg(g_e_completion(minus, e)) + 1;
    if (r != std::max(a, b))
      rec.fail("reg(G) = max(reg(G\\e), reg((G\\e)_e)+1) at " + str(e.first) + "-" + str(e.second),
               str(r) + " vs max(" + str(a) + ", " + str(b) + ")");
  }

  // Splitting at degree-two vertices adds.
  const auto pieces = split_at_degree_two(t);
  if (pieces.size() > 1) {
    int sum = 0;
    for (const auto& piece : pieces) sum += reg(piece.tree.graph());
    if (sum != r) rec.fail("split at degree two: reg adds", str(sum) + " vs " + str(r));
  }

  // Trim credit.
  const auto trim = trim_caterpillars(t);
  if (trim.length_credit > 0 && 2 * trim.trimmed.order() <= opts.limits.max_vars) {
    const int rt = reg(trim.trimmed.graph());
    if (rt + trim.length_credit != r)
      rec.fail("trim: reg = reg(trimmed) + credit", str(rt) + "+" + str(trim.length_credit) + " vs " + str(r));
  }

  // Induced subgraph on V \ {v}.
  if (t.order() >= 2) {
    const Vertex v = static_cast<Vertex>(1 + pick % static_cast<std::uint64_t>(t.order()));
    std::vector<Vertex> keep;
    for (Vertex u = 1; u <= t.order(); ++u)
      if (u != v) keep.push_back(u);
    const int rh = reg(induced_subgraph(g, keep).graph);
    if (rh > r) rec.fail("induced subgraph: reg(G - " + str(v) + ") <= reg(G)", str(rh) + " > " + str(r));
  }

  if (opts.compare_fields && divergences && opts.field.characteristic() != 2) {
    const int r2 = oracle_reg(g, FieldSpec(2), opts.limits);
    if (r2 != r)
      divergences->push_back({rec.code, "GF(2) vs GF(" + std::to_string(opts.field.characteristic()) + ")",
                              str(r2) + " vs " + str(r)});
  }
  return out;
}

std::vector<VerifyFailure> gluing_checks(const FieldSpec& field, const OracleLimits& limits,
                                         std::size_t* instances) {
  std::vector<VerifyFailure> out;
  std::size_t count = 0;
  auto reg = [&](const SimpleGraph& h) { return oracle_reg(h, field, limits); };
  const std::vector<Edge> paw_edges{{1, 2}, {1, 3}, {2, 3}, {3, 4}};
  const SimpleGraph paw(4, paw_edges);

  // Gbar_s^v = 1 + G_s^v, any vertex v.
  const std::pair<SimpleGraph, Vertex> bases1[] = {
      {SimpleGraph::path(2), 1},     {SimpleGraph::path(3), 1}, {SimpleGraph::path(3), 2},
      {SimpleGraph::star(3), 1},     {SimpleGraph::star(3), 2}, {SimpleGraph::path(4), 2},
      {SimpleGraph::complete(3), 1}, {paw, 3},                  {SimpleGraph::path(5), 3},
  };
  for (const auto& [g, v] : bases1)
    for (int s = 2; s <= 3; ++s) {
      ++count;
      const int bar = reg(attach_star_via_leaf(g, v, s)), plain = reg(attach_clique(g, v, s));
      if (bar != plain + 1)
        out.push_back({tree_code(g), "reg(Gbar_" + str(s) + "^" + str(v) + ") = 1 + reg(G_" + str(s) + "^" + str(v) + ")",
                       str(bar) + " vs 1+" + str(plain)});
    }

  // G_{s,t}^v = 1 + (G \ v)_{s+t}^w, v a leaf with neighbour w.
  const std::tuple<SimpleGraph, Vertex, Vertex> bases2[] = {
      {SimpleGraph::path(2), 2, 1}, {SimpleGraph::path(3), 3, 2}, {SimpleGraph::star(3), 2, 1},
      {SimpleGraph::path(4), 4, 3}, {paw, 4, 3},
  };
  for (const auto& [g, v, w] : bases2)
    for (int s = 1; s <= 3; ++s)
      for (int t = 2; t <= 3; ++t) {
        ++count;
        SimpleGraph glued = g;
        for (int k = 0; k < s; ++k) glued = attach_clique(glued, v, 2);
        glued = attach_clique(glued, v, t);
        const int left = reg(glued), right = reg(attach_clique(delete_vertex(g, v), w, s + t));
        if (left != right + 1)
          out.push_back({tree_code(g),
                         "reg(G_{" + str(s) + "," + str(t) + "}^" + str(v) + ") = 1 + reg((G\\v)_" + str(s + t) + "^" + str(w) + ")",
                         str(left) + " vs 1+" + str(right)});
      }

  // Gluing at a free vertex adds.
  const std::tuple<SimpleGraph, Vertex, SimpleGraph, Vertex> pairs[] = {
      {SimpleGraph::path(3), 1, SimpleGraph::star(3), 2},
      {SimpleGraph::path(4), 4, SimpleGraph::path(3), 1},
      {SimpleGraph::complete(3), 1, SimpleGraph::path(3), 1},
      {SimpleGraph::star(3), 4, SimpleGraph::star(4), 5},
      {paw, 4, SimpleGraph::complete(4), 2},
      {SimpleGraph::complete(3), 2, SimpleGraph::complete(3), 3},
  };
  for (const auto& [g, u, h, w] : pairs) {
    ++count;
    const int whole = reg(glue(g, u, h, w)), a = reg(g), b = reg(h);
    if (whole != a + b)
      out.push_back({tree_code(g) + " + " + tree_code(h), "free-vertex gluing adds", str(whole) + " vs " + str(a) + "+" + str(b)});
  }
  if (instances) *instances = count;
  return out;
}

VerifyReport run_verify(const VerifyOptions& opts) {
  std::vector<Tree> trees;
  for (int n = 1; n <= opts.exhaustive_n; ++n) for_each_labelled_tree(n, [&](const Tree& t) { trees.push_back(t); });
  std::mt19937_64 rng(opts.seed);
  for (int k = 0; k < opts.random; ++k) {
    const int n = uniform_int(rng, 2, std::max(2, opts.max_n));
    trees.push_back(random_tree(n, rng));
  }

  VerifyReport report;
  report.cases = trees.size();
  std::mutex lock;
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> oracle_cases{0};
  auto worker = [&] {
    std::vector<VerifyFailure> failures, divergences;
    for (std::size_t k; (k = next++) < trees.size();) {
      const Tree& t = trees[k];
      auto f = formula_checks(t);
      failures.insert(failures.end(), f.begin(), f.end());
      if (opts.formula_only || 2 * t.order() > opts.limits.max_vars) continue;
      ++oracle_cases;
      auto o = oracle_checks(t, opts, opts.seed ^ (k * 0x9E3779B97F4A7C15ull), &divergences);
      failures.insert(failures.end(), o.begin(), o.end());
    }
    std::lock_guard guard(lock);
    report.failures.insert(report.failures.end(), failures.begin(), failures.end());
    report.char_divergences.insert(report.char_divergences.end(), divergences.begin(), divergences.end());
  };
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, trees.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  report.oracle_cases = oracle_cases;

  if (!opts.formula_only && opts.gluing) {
    auto g = gluing_checks(opts.field, opts.limits, &report.gluing_cases);
    report.failures.insert(report.failures.end(), g.begin(), g.end());
  }
  std::sort(report.failures.begin(), report.failures.end());
  std::sort(report.char_divergences.begin(), report.char_divergences.end());
  return report;
}

std::string format_verify(const VerifyReport& r) {
  std::ostringstream out;
  out << "trees checked      " << r.cases << "\n";
  out << "with oracle        " << r.oracle_cases << "\n";
  out << "gluing instances   " << r.gluing_cases << "\n";
  out << "failures           " << r.failures.size() << "\n";
  out << "field divergences  " << r.char_divergences.size() << "\n";
  for (const auto& f : r.failures) out << "FAIL  " << f.relation << "  [" << f.tree << "]  " << f.observed << "\n";
  for (const auto& f : r.char_divergences)
    out << "DIVERGE  " << f.relation << "  [" << f.tree << "]  " << f.observed << "\n";
  return out.str();
}

nlohmann::json verify_to_json(const VerifyReport& r) {
  auto list = [](const std::vector<VerifyFailure>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& f : v) a.push_back({{"tree", f.tree}, {"relation", f.relation}, {"observed", f.observed}});
    return a;
  };
  return {{"cases", r.cases},
          {"oracle_cases", r.oracle_cases},
          {"gluing_cases", r.gluing_cases},
          {"failures", list(r.failures)},
          {"char_divergences", list(r.char_divergences)}};
}

}  // namespace beireg
