#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "beireg/field.hpp"
#include "beireg/initial_ideal.hpp"

namespace beireg {

struct VerifyOptions {
  int random = 0;          // random trees to draw
  int max_n = 8;           // their order is uniform in [2, max_n]
  std::uint64_t seed = 1;
  int exhaustive_n = 0;    // every labelled tree with at most this many vertices
  bool formula_only = false;
  bool gluing = true;      // run the fixed gluing-identity instances
  bool compare_fields = true;
  unsigned threads = 0;    // 0: hardware concurrency
  FieldSpec field;
  OracleLimits limits;
};

struct VerifyFailure {
  std::string tree;      // edge list on one line: "1-2 2-3 ..."
  std::string relation;  // the identity or inequality that broke
  std::string observed;

  auto operator<=>(const VerifyFailure&) const = default;
};

struct VerifyReport {
  std::size_t cases = 0;         // trees checked
  std::size_t oracle_cases = 0;  // of those, trees small enough for the oracle
  std::size_t gluing_cases = 0;
  std::vector<VerifyFailure> failures;
  /// Trees whose regularity differs between GF(2) and the main field.
  std::vector<VerifyFailure> char_divergences;

  bool ok() const { return failures.empty(); }
};

/// Runs the checks selected by `opts`. Output is sorted, so it does not
/// depend on the number of threads.
VerifyReport run_verify(const VerifyOptions& opts);

/// Checks that need no oracle, for one tree.
std::vector<VerifyFailure> formula_checks(const Tree& t);
/// Oracle-backed checks for one tree. `pick` chooses the vertex removed for
/// the induced-subgraph check. Divergences between fields go to `divergences`.
std::vector<VerifyFailure> oracle_checks(const Tree& t, const VerifyOptions& opts, std::uint64_t pick,
                                         std::vector<VerifyFailure>* divergences = nullptr);
/// Gluing identities on a fixed list of small base graphs.
std::vector<VerifyFailure> gluing_checks(const FieldSpec& field, const OracleLimits& limits,
                                         std::size_t* instances = nullptr);

std::string tree_code(const SimpleGraph& g);
std::string format_verify(const VerifyReport& r);
nlohmann::json verify_to_json(const VerifyReport& r);

}  // namespace beireg
