#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lowtail/model.hpp"
#include "lowtail/prob.hpp"

namespace lowtail {

enum class RelationMode { support_overlap, exact_refined, user_supplied };

// Symmetric irreflexive relation on event indices. Non-related pairs must be
// genuinely independent for the bounds to apply; validate_relation checks
// this, and the support-overlap construction guarantees it.
class DependencyRelation {
 public:
  DependencyRelation(std::size_t k, std::vector<std::pair<std::size_t, std::size_t>> pairs, RelationMode mode);

  std::size_t k() const noexcept { return k_; }
  RelationMode mode() const noexcept { return mode_; }
  bool related(std::size_t i, std::size_t j) const;
  std::span<const std::size_t> neighbors(std::size_t i) const { return adj_[i]; }
  // Unordered pairs, normalized i < j, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const noexcept { return pairs_; }
  std::size_t pair_count() const noexcept { return pairs_.size(); }

 private:
  std::size_t k_;
  RelationMode mode_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::vector<std::size_t>> adj_;
};

// i ~ j iff the supports intersect. Sound under the product measure:
// disjoint supports imply independence.
DependencyRelation build_support_relation(const EventFamily& family);

struct RefineOutcome {
  DependencyRelation relation;
  std::size_t removed = 0;
  std::vector<std::string> warnings;  // pairs kept because exact evaluation was infeasible
};

// Drops pairs whose joint probability factorizes within tol. Exact
// computation only; pairs whose joint support exceeds the cap are retained
// with a warning.
RefineOutcome refine_exact(const DependencyRelation& rel, const EventFamily& family, double tol,
                           const ProbConfig& cfg);

struct SubsetCheckEntry {
  std::size_t event;
  std::size_t subsets_checked;
  bool exhaustive;
  bool statistical;         // some ingredient was Monte Carlo
  double worst_violation;   // max |Pr(A_i and all of T) - Pr(A_i) Pr(all of T)|
  double worst_excess;      // statistical entries: violation beyond 3 combined std errors
};

struct ValidationReport {
  bool pass = true;
  double tol = 0.0;
  double worst_violation = 0.0;
  std::vector<SubsetCheckEntry> entries;
  std::vector<std::string> warnings;
};

// Checks that each A_i is independent of every intersection over its
// non-neighbors: exhaustive when an event has at most 10 non-neighbors,
// otherwise 200 seeded random subsets.
ValidationReport validate_relation(const DependencyRelation& rel, const EventFamily& family, double tol,
                                   const ProbConfig& cfg);

}  // namespace lowtail
