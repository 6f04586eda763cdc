#pragma once

// Reproduces the reference tables and verdicts the library is built against
// and reports pass/fail per check.

#include <string>
#include <vector>

#include "hecke/reduction.hpp"

namespace hecke {

struct SelftestOptions {
  /// Item ids to run; empty runs everything.
  std::vector<std::string> only;
  /// Division rule used by the reduction items (fault injection).
  TieRule tie = TieRule::UpperClosed;
};

struct SelftestLine {
  std::string item;
  std::string label;
  bool pass = false;
  std::string detail;
};

struct SelftestReport {
  std::vector<SelftestLine> lines;

  bool all_pass() const;
  std::size_t failures() const;
};

/// Ids in execution order.
const std::vector<std::string>& selftest_items();

/// Throws BadRange on an unknown id in `only`.
SelftestReport run_selftest(const SelftestOptions& opts = {});

}  // namespace hecke
