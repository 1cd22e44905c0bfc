#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qglab/report.hpp"
#include "qglab/spectral.hpp"
#include "qglab/verify.hpp"

namespace qglab {

struct SuiteConfig {
  std::uint64_t seed = 7;
  /// Counterexample MGF files go here (nothing is written when empty).
  std::string out_dir;
  SolverOptions solver;
};

/// A single pass/fail line of a suite.
struct SuiteCheck {
  std::string name;
  bool passed = false;
  double margin = 0.0;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<Record> records;
  std::vector<Table> tables;
  std::vector<SuiteCheck> checks;

  bool passed() const;
};

/// "exactness", "fem", "roots", "thm1", "convergence", "thm2", "surgery",
/// "hadamard", "nodal", "discrepancy", "stars", "invariants", "conjecture".
std::vector<std::string> suite_names();

/// Runs one named suite, or every suite for "all". Throws
/// std::invalid_argument for an unknown name.
std::vector<SuiteResult> run_suite(const std::string& name, const SuiteConfig& config);

/// Per suite `<name>.<ext>` with its records, `<name>_<table>.<ext>` per
/// table, and `summary.json` with every check.
void write_suite(const std::vector<SuiteResult>& results, const std::string& dir, Format f);

}  // namespace qglab
