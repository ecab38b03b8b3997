#pragma once

#include <cstdint>

#include "lowtail/model.hpp"

namespace lowtail {

enum class Method { exact, monte_carlo };

// Probability with provenance. Exact values carry zero standard error; a
// Monte Carlo estimate carries its estimated standard error (which can be
// zero for constant indicators).
struct ProbValue {
  double value = 0.0;
  Method method = Method::exact;
  double std_error = 0.0;
};

struct ProbConfig {
  int max_exact_support = 25;
  std::uint64_t mc_samples = 0;  // 0 disables the Monte Carlo fallback
  std::uint64_t seed = 0;
};

// Pr(A) by memoized Shannon expansion over the support coordinates.
// Throws TooLargeForExact when the support exceeds the cap.
double exact_prob(const UpSet& a, const ProductSpace& space, int max_exact_support = 25);

// Seeded frequency estimate; draws only the support coordinates.
ProbValue mc_prob(const UpSet& a, const ProductSpace& space, std::uint64_t samples, std::uint64_t seed);

// Exact when the support fits the cap, otherwise Monte Carlo if enabled.
ProbValue prob(const UpSet& a, const ProductSpace& space, const ProbConfig& cfg);

// Pr(A and B); factorizes exactly when the supports are disjoint.
ProbValue pair_prob(const UpSet& a, const UpSet& b, const ProductSpace& space, const ProbConfig& cfg);

}  // namespace lowtail
