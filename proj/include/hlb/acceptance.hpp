#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hlb::acceptance {

/// One expected/actual comparison inside a criterion.
struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  double tolerance = 0.0;
  bool passed = false;
};

struct CriterionResult {
  int number = 0;
  std::string group;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool passed() const;
};

struct Options {
  /// Groups to run; empty runs everything. Names: anchor, exponents, norms,
  /// soundness, thm777, chain, references, properties.
  std::vector<std::string> groups;
  /// Self-test hook: corrupt the computed values of this group so the
  /// failure path can be exercised.
  std::optional<std::string> inject_fault;
  /// Randomized cases per property (criterion 8).
  int property_cases = 200;
};

std::vector<std::string> group_names();

/// Throws hlb::ParseError for an unknown group name.
std::vector<CriterionResult> run(const Options& options = {});

/// Per-check table followed by one PASS/FAIL line per criterion.
std::string render(const std::vector<CriterionResult>& results, bool verbose);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace hlb::acceptance
