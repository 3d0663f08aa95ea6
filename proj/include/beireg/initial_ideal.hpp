#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "beireg/graph.hpp"

namespace beireg {

/// Squarefree monomial in the ring k[x_1..x_n, y_1..y_n], as a set of ring
/// variables. Variable k (1-based; x_i is i, y_j is n + j) is bit k - 1.
using VarSet = std::uint64_t;

inline constexpr int kMaxRingVars = 64;

inline VarSet x_var(Vertex i) { return VarSet{1} << (i - 1); }
inline VarSet y_var(int n, Vertex j) { return VarSet{1} << (n + j - 1); }

class SizeCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleLimits {
  int max_vars = 20;
  std::size_t max_lattice = 2'000'000;
};

/// f_ij = x_i y_j - x_j y_i for the edge {i, j}, i < j.
struct EdgeBinomial {
  Vertex i = 0;
  Vertex j = 0;
};

/// Path i = i_0, ..., i_r = j (i < j) whose interior avoids [i, j] and has no
/// proper subset that still connects i to j. Its Gröbner element has lex
/// leading term `monomial` = x_i y_j prod_{k > j} x_k prod_{k < i} y_k.
struct AdmissiblePath {
  Vertex i = 0;
  Vertex j = 0;
  std::vector<Vertex> interior;
  VarSet monomial = 0;
};

/// Squarefree monomial ideal given by its minimal generators.
class SquarefreeMonomialIdeal {
 public:
  SquarefreeMonomialIdeal() = default;
  /// Drops duplicates and non-minimal generators; sorts the rest.
  SquarefreeMonomialIdeal(int num_vars, std::vector<VarSet> generators);

  int num_vars() const { return num_vars_; }
  const std::vector<VarSet>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool contains(VarSet monomial) const;

 private:
  int num_vars_ = 0;
  std::vector<VarSet> gens_;
};

std::vector<EdgeBinomial> edge_binomials(const SimpleGraph& g);

/// Throws SizeCapError when 2n exceeds limits.max_vars.
std::vector<AdmissiblePath> admissible_paths(const SimpleGraph& g, const OracleLimits& limits = {});

/// in(J_G) for lex with x_1 > ... > x_n > y_1 > ... > y_n.
SquarefreeMonomialIdeal initial_ideal(const SimpleGraph& g, const OracleLimits& limits = {});

/// "x1*x3*y2"; `n` is the number of graph vertices.
std::string monomial_string(VarSet m, int n);
std::string variable_name(int var_index, int n);

}  // namespace beireg
