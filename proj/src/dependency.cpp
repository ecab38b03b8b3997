#include "lowtail/dependency.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lowtail/errors.hpp"
#include "lowtail/rng.hpp"

namespace lowtail {

DependencyRelation::DependencyRelation(std::size_t k, std::vector<std::pair<std::size_t, std::size_t>> pairs,
                                       RelationMode mode)
    : k_(k), mode_(mode) {
  pairs_.reserve(pairs.size());
  for (auto [i, j] : pairs) {
    if (i == j) throw std::invalid_argument("dependency relation must be irreflexive (got pair {" +
                                            std::to_string(i) + ", " + std::to_string(i) + "})");
    if (i >= k || j >= k) {
      throw std::out_of_range("dependency pair {" + std::to_string(i) + ", " + std::to_string(j) +
                              "} is outside the event range [0, " + std::to_string(k) + ")");
    }
    pairs_.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());

  adj_.assign(k_, {});
  for (auto [i, j] : pairs_) {
    adj_[i].push_back(j);
    adj_[j].push_back(i);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool DependencyRelation::related(std::size_t i, std::size_t j) const {
  if (i == j) return false;
  const auto& nbrs = adj_[i];
  return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

DependencyRelation build_support_relation(const EventFamily& family) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const std::size_t k = family.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if ((family.event(i).support() & family.event(j).support()) != 0) {
        pairs.emplace_back(i, j);
      }
    }
  }
  return DependencyRelation(k, std::move(pairs), RelationMode::support_overlap);
}

RefineOutcome refine_exact(const DependencyRelation& rel, const EventFamily& family, double tol,
                           const ProbConfig& cfg) {
  std::vector<std::pair<std::size_t, std::size_t>> kept;
  std::vector<std::string> warnings;
  std::size_t removed = 0;
  for (auto [i, j] : rel.pairs()) {
    const UpSet& a = family.event(i);
    const UpSet& b = family.event(j);
    try {
      const double joint = exact_prob(intersect(a, b), family.space(), cfg.max_exact_support);
      const double split = exact_prob(a, family.space(), cfg.max_exact_support) *
                           exact_prob(b, family.space(), cfg.max_exact_support);
      if (std::abs(joint - split) <= tol) {
        ++removed;
        continue;
      }
    } catch (const TooLargeForExact& e) {
      warnings.push_back("pair {" + std::to_string(i) + ", " + std::to_string(j) +
                         "} retained without the exact test: " + e.what());
    }
    kept.emplace_back(i, j);
  }
  return RefineOutcome{DependencyRelation(rel.k(), std::move(kept), RelationMode::exact_refined), removed,
                       std::move(warnings)};
}

namespace {

// Non-neighbors of i, ascending.
std::vector<std::size_t> independent_set(const DependencyRelation& rel, std::size_t i) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < rel.k(); ++j) {
    if (j != i && !rel.related(i, j)) out.push_back(j);
  }
  return out;
}

}  // namespace

ValidationReport validate_relation(const DependencyRelation& rel, const EventFamily& family, double tol,
                                   const ProbConfig& cfg) {
  constexpr std::size_t kExhaustiveLimit = 10;
  constexpr std::size_t kSampledSubsets = 200;

  ValidationReport report;
  report.tol = tol;

  for (std::size_t i = 0; i < rel.k(); ++i) {
    const std::vector<std::size_t> others = independent_set(rel, i);
    SubsetCheckEntry entry{i, 0, others.size() <= kExhaustiveLimit, false, 0.0, 0.0};

    const UpSet& ai = family.event(i);
    auto check_subset = [&](const std::vector<std::size_t>& subset) {
      UpSet rest = UpSet::sure();
      for (std::size_t j : subset) rest = intersect(rest, family.event(j));
      try {
        const ProbValue lhs = prob(intersect(ai, rest), family.space(), cfg);
        const ProbValue pa = prob(ai, family.space(), cfg);
        const ProbValue pr = prob(rest, family.space(), cfg);
        const double violation = std::abs(lhs.value - pa.value * pr.value);
        entry.worst_violation = std::max(entry.worst_violation, violation);
        if (lhs.method == Method::monte_carlo || pa.method == Method::monte_carlo ||
            pr.method == Method::monte_carlo) {
          entry.statistical = true;
          const double se = lhs.std_error + pa.value * pr.std_error + pr.value * pa.std_error;
          entry.worst_excess = std::max(entry.worst_excess, std::max(0.0, violation - 3.0 * se));
        } else {
          entry.worst_excess = std::max(entry.worst_excess, violation);
        }
        ++entry.subsets_checked;
      } catch (const TooLargeForExact& e) {
        report.warnings.push_back("event " + std::to_string(i) + ": a subset check was skipped: " + e.what());
      }
    };

    if (entry.exhaustive) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << others.size()); ++mask) {
        std::vector<std::size_t> subset;
        for (std::size_t b = 0; b < others.size(); ++b) {
          if ((mask >> b) & 1) subset.push_back(others[b]);
        }
        check_subset(subset);
      }
    } else {
      std::mt19937_64 rng(derive_seed(cfg.seed, i));
      for (std::size_t s = 0; s < kSampledSubsets; ++s) {
        std::vector<std::size_t> subset;
        while (subset.empty()) {
          subset.clear();
          for (std::size_t j : others) {
            if (uniform01(rng) < 0.5) subset.push_back(j);
          }
        }
        check_subset(subset);
      }
    }

    report.worst_violation = std::max(report.worst_violation, entry.worst_violation);
    if (entry.worst_excess > tol) report.pass = false;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace lowtail
