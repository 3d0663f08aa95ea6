#pragma once

#include <string>
#include <vector>

#include "beireg/field.hpp"
#include "beireg/graph.hpp"
#include "beireg/initial_ideal.hpp"

namespace beireg {

// Built-in trees with fixed labels.

/// Two adjacent centers 1, 2; supports 3, 4, 5 on 1 and 6, 7, 8 on 2;
/// leaves 9..20, two on each support.
Tree fig2_tree();
/// Hub 1 with d copies of: u adjacent to the hub, a and b adjacent to u, two
/// leaves on each of a and b.
Tree gamma_tree(int d);
/// Center 1; supports 2, 3, 4, each with two leaves.
Tree jewel10_tree();
/// Centers 1 and 3 joined through 2 (which also carries leaf 4); supports
/// 5, 6 on 1 and 7, 8 on 3, each with two leaves.
Tree two_jewel_chain_tree();

/// A value printed in the literature or derived by hand, against ours.
struct ExampleCheck {
  std::string example;
  std::string quantity;
  int expected = 0;
  int computed = 0;
  bool ok() const { return expected == computed; }
};

struct GammaRow {
  int d = 0;
  int thm_lower = 0;
  int thm_upper = 0;
  int closed_form = 0;  // 5d - floor((d + 1) / 3)
  int block_bound = 0;  // 5d
};

std::vector<ExampleCheck> fig2_checks();
std::vector<GammaRow> gamma_table(int d_from = 3, int d_to = 6);
/// Runs the oracle on the 10-vertex jewel.
std::vector<ExampleCheck> jewel_checks(const FieldSpec& field = {}, const OracleLimits& limits = {});
/// Oracle on minimal family members for (s,t) in {(0,2),(1,1),(2,0),(1,2)}, m in {0,1}.
std::vector<ExampleCheck> family_checks(const FieldSpec& field = {}, const OracleLimits& limits = {});

}  // namespace beireg
