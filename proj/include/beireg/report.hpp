#pragma once

#include <string>

#include <json.hpp>

#include "beireg/bounds.hpp"
#include "beireg/hochster.hpp"
#include "beireg/jewel.hpp"

namespace beireg {

struct BoundsSummary {
  int mm_lower = 0;
  int mm_upper = 0;
  int iv_lower = 0;
  int thm_lower = 0;
  int thm_upper = 0;

  bool operator==(const BoundsSummary&) const = default;
};

/// Everything `beireg analyze` prints for one tree.
struct AnalyzeReport {
  int n = 0;
  JewelProfile profile;
  BoundsSummary bounds;
  RegularityEstimate estimate;

  bool operator==(const AnalyzeReport&) const = default;
};

AnalyzeReport analyze(const Tree& t);

void to_json(nlohmann::json& j, const JewelProfile& p);
void from_json(const nlohmann::json& j, JewelProfile& p);
void to_json(nlohmann::json& j, const TraceStep& s);
void from_json(const nlohmann::json& j, TraceStep& s);
void to_json(nlohmann::json& j, const AnalyzeReport& r);
void from_json(const nlohmann::json& j, AnalyzeReport& r);

/// Human-readable table.
std::string format_analyze(const AnalyzeReport& r);

/// Betti table as JSON: multigraded entries (supports named x1.., y1..),
/// the graded table, and the regularity.
nlohmann::json betti_to_json(const BettiTable& table, int graph_order);

/// DOT drawing: jewel centers filled and annotated with D(c), vertices of
/// C_G drawn as boxes.
std::string export_dot(const Tree& t);

}  // namespace beireg
