#pragma once

#include <string>
#include <vector>

namespace tfu {

struct AcceptanceOptions {
  /// Runs criteria whose number or name contains this text (case-insensitive);
  /// empty runs all.
  std::string filter;
  /// Mutation check: inverts the 4 pi^2 factor of the reference ambiguity
  /// bounds, which must make criteria 4 and 5 fail.
  bool mutate_ambiguity_bound = false;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  /// Measured quantities and tolerances, `key=value` separated by spaces.
  std::string detail;
};

struct AcceptanceReport {
  std::vector<CriterionResult> results;

  bool all_pass() const;
  /// One line per criterion plus a summary line. Contains no timings, so
  /// repeated runs produce identical bytes.
  std::string text() const;
};

/// Names of the criteria in order, for --filter help.
const std::vector<std::string>& criterion_names();

AcceptanceReport verify_all(const AcceptanceOptions& options = {});

}  // namespace tfu
