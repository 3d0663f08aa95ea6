#include "beireg/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace beireg {

std::pair<int, int> matsuda_murai_bounds(const Tree& t) {
  // Every path in a tree is induced.
  return {spine(t).length(), t.order() - 1};
}

int thm_upper(const JewelProfile& prof) {
  int floor_sum = 0;
  for (int size : prof.components) floor_sum += size / 3;
  return prof.iv + 1 + prof.d_g - 2 * prof.s - prof.e_g - floor_sum;
}

int thm_upper(const Tree& t) { return thm_upper(jewel_profile(t)); }

int thm_lower(const JewelProfile& prof) {
  const int value = prof.iv + 1 + prof.d_g - 3 * prof.s - prof.mu + prof.p;
  int excess = 0;
  for (int size : prof.components) excess += size - 1;
  const int alt = prof.iv + 1 + prof.d_g - 2 * prof.s - prof.mu - excess;
  if (value != alt) throw std::logic_error("lower bound forms disagree");
  return value;
}

int thm_lower(const Tree& t) { return thm_lower(jewel_profile(t)); }

std::optional<ExactValue> exact_rules(const Tree& t) {
  if (t.order() == 1) return ExactValue{0, rules::kEdgeless};

  const auto prof = jewel_profile(t);
  std::vector<ExactValue> fired;

  const bool small_components =
      std::all_of(prof.components.begin(), prof.components.end(), [](int s) { return s <= 2; });
  if (prof.mu == 0 && small_components)
    fired.push_back({prof.iv + 1 + prof.d_g - 2 * prof.s - prof.e_g, rules::kCorollary});
  if (prof.s == 1) fired.push_back({prof.iv + prof.centers.front().d - 1, rules::kOneJewel});
  if (prof.s == 0) fired.push_back({prof.iv + 1, rules::kJewelFree});
  if (auto l = is_caterpillar(t)) fired.push_back({*l, rules::kCaterpillar});

  if (fired.empty()) return std::nullopt;
  for (const auto& f : fired)
    if (f.value != fired.front().value)
      throw std::logic_error(std::string("exact rules disagree: ") + fired.front().rule + "=" +
                             std::to_string(fired.front().value) + " vs " + f.rule + "=" +
                             std::to_string(f.value));
  return fired.front();
}

int family_gstm_reg(int s, int t, int m) {
  if (s < 0 || t < 0 || m < 0) throw std::invalid_argument("negative family parameter");
  if (s + t < 2) throw std::invalid_argument("family needs s + t >= 2");
  return 2 * s + t;
}

SimpleGraph family_gstm_graph(int s, int t, int m, int star_leaves, int clique_size) {
  family_gstm_reg(s, t, m);
  if (star_leaves < 3) throw std::invalid_argument("star arms need at least 3 leaves");
  if (clique_size < 3) throw std::invalid_argument("cliques need at least 3 vertices");
  SimpleGraph g(1);
  for (int k = 0; k < s; ++k) g = attach_star_via_leaf(g, 1, star_leaves);
  for (int k = 0; k < t; ++k) g = attach_clique(g, 1, clique_size);
  for (int k = 0; k < m; ++k) g = attach_clique(g, 1, 2);
  return g;
}

namespace {

std::string piece_name(const std::vector<Vertex>& labels) {
  std::string out = "{";
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(labels[k]);
  }
  return out + "}";
}

}  // namespace

RegularityEstimate estimate(const Tree& t) {
  RegularityEstimate est;
  if (t.order() == 1) {
    est.trace.push_back({rules::kEdgeless, "{1}", 0, std::nullopt});
    est.exact = 0;
    return est;
  }

  const auto pieces = split_at_degree_two(t);
  if (pieces.size() > 1)
    est.trace.push_back({rules::kSplit, piece_name(t.graph().vertices()),
                         static_cast<int>(pieces.size()), std::nullopt});

  for (const auto& piece : pieces) {
    const std::string name = piece_name(piece.labels);
    const auto trim = trim_caterpillars(piece.tree);
    if (trim.length_credit > 0)
      est.trace.push_back({rules::kTrim, name, trim.length_credit, std::nullopt});

    int lo = 0, hi = 0;
    if (auto exact = exact_rules(trim.trimmed)) {
      lo = hi = exact->value;
      est.trace.push_back({exact->rule, name, lo, std::nullopt});
    } else {
      const auto prof = jewel_profile(trim.trimmed);
      const auto [mm_lo, mm_hi] = matsuda_murai_bounds(trim.trimmed);
      lo = std::max(thm_lower(prof), mm_lo);
      hi = std::min(thm_upper(prof), mm_hi);
      if (lo > hi) throw std::logic_error("empty regularity interval on piece " + name);
      if (lo == hi) {
        est.trace.push_back({rules::kCoinciding, name, lo, std::nullopt});
      } else {
        est.trace.push_back({rules::kBounds, name, lo, hi});
      }
    }
    est.lower += trim.length_credit + lo;
    est.upper += trim.length_credit + hi;
  }

  if (pieces.size() > 1)
    est.trace.push_back({rules::kSum, piece_name(t.graph().vertices()), est.lower,
                         est.lower == est.upper ? std::nullopt : std::optional<int>(est.upper)});
  if (est.lower == est.upper) est.exact = est.lower;
  return est;
}

}  // namespace beireg
