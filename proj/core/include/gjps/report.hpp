#pragma once

#include <json.hpp>

#include "gjps/problem_spec.hpp"

namespace gjps {

/// Outcome of one full analysis run. `report` is the machine-readable body:
/// deterministic for a given ProblemSpec (ordered keys, no timing, no
/// timestamps). Wall-clock time goes to the human-readable table only.
struct AnalysisResult {
  nlohmann::ordered_json report;
  bool all_checks_pass = true;
  double elapsed_seconds = 0.0;
};

// Validates hypotheses and runs the requested checks. Throws InputError for
// malformed polynomials (exit 2) and HypothesisError for failed mathematical
// hypotheses (exit 3).
AnalysisResult analyze(const ProblemSpec& spec);

std::string render_table(const AnalysisResult& result);
// One PASS/FAIL line per statement exercised, plus series notes.
std::string render_verify(const AnalysisResult& result);

}  // namespace gjps
