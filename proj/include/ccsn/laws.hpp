#pragma once

// Property-law suites over the trace algebra and the identifier algebra,
// shared by the unit tests, the acceptance gate, and the command line.
// Each report counts checks and keeps the first counterexample.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ccsn {

struct LawsOptions {
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  int nbar = 2;
  // Swaps in a choice combination that keeps settled deadlocks. The
  // absorption law must then fail; demonstrates the suite has teeth.
  bool mutateChoiceMerge = false;
};

struct LawReport {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string firstCounterexample;
};

std::vector<LawReport> runLawSuites(const LawsOptions& opts);

bool allPassed(const std::vector<LawReport>& reports);

}  // namespace ccsn
