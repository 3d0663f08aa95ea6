#pragma once

#include <map>
#include <optional>
#include <utility>

#include "beireg/field.hpp"
#include "beireg/homology.hpp"
#include "beireg/initial_ideal.hpp"

namespace beireg {

/// Multigraded Betti numbers of S/I for a squarefree monomial ideal I:
/// entries[(i, W)] = beta_{i,W}(S/I), nonzero entries only.
struct BettiTable {
  int num_vars = 0;
  std::map<std::pair<int, VarSet>, long long> entries;
  int regularity = 0;

  /// beta_{i,j} = sum of entries with |W| = j.
  std::map<std::pair<int, int>, long long> graded() const;
  /// max(j - i) over nonzero entries.
  int regularity_from_entries() const;
};

struct HochsterResult {
  int regularity = 0;
  std::optional<BettiTable> table;
  std::size_t lattice_size = 0;  // nonempty unions of generator supports
  std::size_t evaluated = 0;     // lattice elements whose homology was computed
};

/// reg(S/I) from Hochster's formula, restricted to the lcm lattice. Without
/// `full_table`, elements are visited by decreasing |W| - (fewest generators
/// covering W) and the scan stops once that bound cannot beat the best value.
/// Throws SizeCapError when the lattice exceeds limits.max_lattice.
HochsterResult hochster_regularity(const SquarefreeMonomialIdeal& ideal, const FieldSpec& field,
                                   const OracleLimits& limits = {}, bool full_table = false);

/// reg(S/J_G) computed as reg(S/in(J_G)); 0 for an edgeless graph.
int oracle_reg(const SimpleGraph& g, const FieldSpec& field = {}, const OracleLimits& limits = {});

}  // namespace beireg
