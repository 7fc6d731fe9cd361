#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "catkit_tools/report.hpp"

namespace catkit::tools {

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  int dim = 2;
  int deg = 2;
  int n = 1;  // vertical bound for bold-nf and classify
  int s = 1;
  int t = 1;
  std::uint64_t budget = kDefaultBudget;
  std::size_t cap = 20'000;
  std::string out;  // dump destination; empty keeps the dump in the report
  Format format = Format::Text;
  bool timing = false;
  std::string corpus;    // corpus-verify
  std::string criteria;  // corpus-verify, e.g. "1-11,13"
};

const std::vector<std::string>& command_names();

/// Validates the config and dispatches. Throws catkit::Error (ParseError,
/// UnknownCommand, PreconditionViolated, ...).
Report run(const RunConfig& config);

}  // namespace catkit::tools
