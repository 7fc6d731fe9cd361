#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace catkit {

enum class Outcome { Holds, Fails, Unknown };

const char* to_string(Outcome outcome);

/// Result of a decision procedure. `Unknown` is reserved for searches that
/// ran out of budget before reaching a conclusion.
struct Verdict {
  Outcome outcome = Outcome::Holds;
  std::string witness;

  bool holds() const { return outcome == Outcome::Holds; }
  bool fails() const { return outcome == Outcome::Fails; }
  bool unknown() const { return outcome == Outcome::Unknown; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

Verdict Holds(std::string note = {});
Verdict Fails(std::string witness);
Verdict Unknown(std::string reason);

/// Combines verdicts: any Fails wins, then any Unknown, else Holds.
Verdict conjoin(const std::vector<Verdict>& parts);

/// A named verdict inside a multi-clause report.
struct Check {
  std::string name;
  Verdict verdict;
};

using CheckReport = std::vector<Check>;

Verdict summarize(const CheckReport& report);

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Counts candidate assignments tried by a search. Shared by nested searches.
class Budget {
 public:
  explicit Budget(std::uint64_t limit = kDefaultBudget) : remaining_(limit) {}

  bool spend(std::uint64_t n = 1) {
    if (remaining_ < n) {
      remaining_ = 0;
      exhausted_ = true;
      return false;
    }
    remaining_ -= n;
    return true;
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t remaining() const { return remaining_; }

 private:
  std::uint64_t remaining_;
  bool exhausted_ = false;
};

/// How an enumeration ended: ran to completion, stopped by the visitor, or
/// ran out of budget.
enum class SearchStatus { Complete, Stopped, BudgetExhausted };

}  // namespace catkit
