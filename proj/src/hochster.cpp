#include "beireg/hochster.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_map>

namespace beireg {

std::map<std::pair<int, int>, long long> BettiTable::graded() const {
  std::map<std::pair<int, int>, long long> out;
  for (const auto& [key, dim] : entries) out[{key.first, std::popcount(key.second)}] += dim;
  return out;
}

int BettiTable::regularity_from_entries() const {
  int reg = 0;
  for (const auto& [key, dim] : entries)
    if (dim != 0) reg = std::max(reg, std::popcount(key.second) - key.first);
  return reg;
}

namespace {

struct LatticeNode {
  VarSet support;
  int cover;  // fewest generators whose union is `support`
};

std::vector<LatticeNode> lcm_lattice(const std::vector<VarSet>& gens, std::size_t cap) {
  std::unordered_map<VarSet, int> cover{{0, 0}};
  std::deque<VarSet> queue{0};
  std::vector<LatticeNode> out;
  while (!queue.empty()) {
    VarSet w = queue.front();
    queue.pop_front();
    int depth = cover[w];
    for (VarSet g : gens) {
      VarSet next = w | g;
      if (cover.emplace(next, depth + 1).second) {
        if (cover.size() - 1 > cap)
          throw SizeCapError("lcm lattice exceeds " + std::to_string(cap) + " elements");
        queue.push_back(next);
        out.push_back({next, depth + 1});
      }
    }
  }
  return out;
}

}  // namespace

HochsterResult hochster_regularity(const SquarefreeMonomialIdeal& ideal, const FieldSpec& field,
                                   const OracleLimits& limits, bool full_table) {
  HochsterResult result;
  BettiTable table;
  table.num_vars = ideal.num_vars();
  table.entries[{0, 0}] = 1;

  const auto& gens = ideal.generators();
  auto lattice = lcm_lattice(gens, limits.max_lattice);
  result.lattice_size = lattice.size();

  auto bound = [](const LatticeNode& node) { return std::popcount(node.support) - node.cover; };
  std::sort(lattice.begin(), lattice.end(), [&](const LatticeNode& a, const LatticeNode& b) {
    int ba = bound(a), bb = bound(b);
    return ba != bb ? ba > bb : a.support < b.support;
  });

  int best = 0;
  for (const auto& node : lattice) {
    if (!full_table && bound(node) <= best) break;
    const int size = std::popcount(node.support);
    HomologyDims dims = reduced_homology(node.support, gens, field);
    ++result.evaluated;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      if (dims[k] == 0) continue;
      const int h = static_cast<int>(k) - 1;
      const int i = size - h - 1;
      table.entries[{i, node.support}] = dims[k];
      best = std::max(best, h + 1);
    }
  }
  result.regularity = best;
  table.regularity = best;
  if (full_table) result.table = std::move(table);
  return result;
}

int oracle_reg(const SimpleGraph& g, const FieldSpec& field, const OracleLimits& limits) {
  auto ideal = initial_ideal(g, limits);
  if (ideal.is_zero()) return 0;
  return hochster_regularity(ideal, field, limits).regularity;
}

}  // namespace beireg
