#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "toricgb/classify.hpp"

namespace toricgb::cli {

struct VerifyOptions {
  Budget budget = Budget::Small;
  /// Run only this item: a counterexample id (S6, ...) or an equality case label ("S(3,3)").
  std::optional<std::string> only;
  std::string out_dir;
  unsigned jobs = 1;
  bool timings = false;
  std::chrono::seconds case_limit{1800};
};

/// Runs the checks, prints the report on stdout and, if out_dir is set,
/// writes report.txt and summary.json there. Returns true when no check
/// failed. Throws std::invalid_argument for an unknown --case value.
bool verify_paper(const VerifyOptions& options);

}  // namespace toricgb::cli
