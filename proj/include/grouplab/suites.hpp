#pragma once

#include <string>
#include <vector>

#include "grouplab/corpus.hpp"
#include "grouplab/structure.hpp"

namespace grouplab {

struct SuiteOptions {
  int max_order = kDefaultLatticeOrderCap;
  int lattice_cap = kDefaultLatticeOrderCap;
};

struct SuiteEntry {
  std::string suite;
  std::string group;  // canonical spec string
  Verdict verdict = Verdict::Pass;
  std::vector<CheckItem> checks;
  std::string note;
  double timing_ms = 0.0;
};

struct SuiteReport {
  std::vector<SuiteEntry> entries;
  int passed = 0, failed = 0, hypothesis_not_met = 0;

  bool any_fail() const { return failed > 0; }
};

const std::vector<std::string>& all_suite_names();

// Runs the named suites (or all of them) over the generated corpus.
// Shared per-group analyses (lattice, permutability, modularity, base data)
// are computed once per member.
SuiteReport run_suites(const std::vector<std::string>& names, const SuiteOptions& opts);

std::string report_json(const SuiteReport& report);

}  // namespace grouplab
