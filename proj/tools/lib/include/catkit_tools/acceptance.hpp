#pragma once

#include <set>
#include <string>
#include <vector>

#include "catkit_tools/report.hpp"

namespace catkit::tools {

struct AcceptanceConfig {
  std::string corpus_dir;
  std::uint64_t budget = kDefaultBudget;
  std::set<int> criteria;  // empty: all of 1..15
  bool fixtures = true;    // also check every corpus fixture
};

struct CriterionOutcome {
  int id = 0;
  std::string title;
  Verdict verdict;
  std::vector<Count> counts;
};

inline constexpr int kCriteria = 15;

/// Criteria that fail with the literal definitions and are kept failing on
/// purpose (see README, "Known open criteria").
inline const std::set<int> kKnownOpen = {12};

std::string criterion_title(int id);
CriterionOutcome run_criterion(int id, const AcceptanceConfig& config);
std::vector<CriterionOutcome> run_acceptance(const AcceptanceConfig& config);

/// Fixture checks followed by one check per criterion ("criterion 7 ...").
Report corpus_report(const AcceptanceConfig& config);

/// "1-11,13" style lists. Throws ParseError.
std::set<int> parse_criteria(const std::string& text);

}  // namespace catkit::tools
