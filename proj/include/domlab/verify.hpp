#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "domlab/domination.hpp"

namespace domlab {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int jobs = 1;
  SolverOptions solver;
};

struct VerifyCheck {
  std::string name;
  bool passed = true;
  std::uint64_t instances = 0;
  std::string detail;
  /// graph6 of the first failing graph, when the check is about a graph.
  std::optional<std::string> counterexample;
};

struct SuiteResult {
  std::string suite;
  std::vector<VerifyCheck> checks;
  double elapsed_ms = 0;

  bool passed() const;
};

/// evenness, prop-transversal, thm-incidence, thm-knn, thm-chordal, thm-oa,
/// lemma-pair.
std::span<const std::string_view> suite_names();

/// Runs one suite at its fixed scale. Throws PreconditionError on an unknown
/// name.
SuiteResult run_suite(std::string_view name, const VerifyOptions& options = {});

}  // namespace domlab
