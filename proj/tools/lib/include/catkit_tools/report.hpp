#pragma once

#include <string>
#include <vector>

#include "catkit/verdict.hpp"

namespace catkit::tools {

enum class Format { Text, Json };

struct Count {
  std::string name;
  long long value = 0;
  friend bool operator==(const Count&, const Count&) = default;
};

struct Report {
  std::string command;  // echo of the invocation, without paths' directories
  std::vector<std::string> provenance;
  std::vector<Check> checks;
  std::vector<Count> counts;
  std::string dump;  // optional payload (category, complex, marking)
  // Wall clock. Only serialized when `with_timing` is set, so reports stay
  // byte-identical across runs by default.
  double seconds = 0;
  bool with_timing = false;
};

Verdict overall(const Report& r);
/// 0 without Fails and Unknowns, 1 with a Fails, else 2.
int exit_status(const Report& r);

std::string to_text(const Report& r);
std::string to_json(const Report& r);
/// Inverse of to_json. Throws ParseError.
Report report_from_json(const std::string& text);

std::string render(const Report& r, Format f);

}  // namespace catkit::tools
