#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lowtail/bounds.hpp"
#include "lowtail/instance.hpp"
#include "lowtail/json_io.hpp"

namespace lowtail {

enum class OutputFormat { table, machine };

struct RunOptions {
  std::vector<double> t_fracs{kDefaultTGrid.begin(), kDefaultTGrid.end()};
  ProbConfig prob;
  double tolerance = 1e-9;         // inequality checks
  double exact_tolerance = 1e-12;  // equality checks
  bool force = false;
  std::optional<DependencyMode> dependency_override;  // --dependency flag
};

// Summary plus every applicable bound on the t-grid. When a user-supplied
// relation fails validation and force is off, the document carries
// "aborted": true and no bounds.
Json run_compute(const Instance& instance, const RunOptions& opts);

// Everything run_compute emits, plus the exact distribution (or a seeded
// statistical stand-in when enumeration is infeasible and Monte Carlo is
// enabled), per-bound domination results, the proof-step checks, the axiom
// checks, and relation validation. "pass" aggregates every check.
Json run_verify(const Instance& instance, const RunOptions& opts);

std::string render(const Json& doc, OutputFormat format);

}  // namespace lowtail
