#pragma once

#include <string>
#include <vector>

namespace divisor_lab {

/// One acceptance criterion, keyed by the lemma/claim it reproduces.
struct CriterionResult {
  int index = 0;
  std::string lemma;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct ReproOptions {
  int threads = 0;             // 0 = hardware concurrency
  std::string checkpoint_dir;  // where long-running criteria park checkpoints (default: cwd)
};

/// Runs the full reproduction suite (twelve criteria) and reports one
/// result per criterion. Never throws: a criterion that raises is a failure
/// carrying the exception text.
std::vector<CriterionResult> run_acceptance_criteria(const ReproOptions& options = {});

}  // namespace divisor_lab
