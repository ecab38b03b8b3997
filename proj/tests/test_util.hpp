#pragma once

#include <initializer_list>
#include <vector>

#include "lowtail/generators.hpp"
#include "lowtail/model.hpp"
#include "lowtail/rng.hpp"

namespace lowtail::test {

inline UpSet upset(std::initializer_list<std::initializer_list<std::size_t>> minsets) {
  std::vector<MinSet> masks;
  for (const auto& ms : minsets) {
    const std::vector<std::size_t> coords(ms.begin(), ms.end());
    masks.push_back(mask_from_indices(coords));
  }
  return canonicalize(std::move(masks));
}

// Triangles of K4 over the 6 lexicographic edge coordinates.
inline EventFamily k4_triangles(double p = 0.5) {
  return generate_subgraph_count("triangle", 4, ProbSpec{p, false, 0, 0}, WeightSpec{}, 0).family;
}

// Random canonical up-set over coordinates [0, n).
inline UpSet random_upset(std::mt19937_64& rng, std::size_t n, std::size_t max_minsets = 3,
                          std::size_t max_size = 4) {
  const std::size_t count = 1 + static_cast<std::size_t>(uniform_below(rng, max_minsets));
  std::vector<MinSet> minsets;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t size = 1 + static_cast<std::size_t>(uniform_below(rng, std::min(max_size, n)));
    minsets.push_back(mask_from_indices(sample_indices(rng, n, size)));
  }
  return canonicalize(std::move(minsets));
}

inline ProductSpace random_space(std::mt19937_64& rng, std::size_t n) {
  std::vector<double> p(n);
  for (double& v : p) v = uniform_range(rng, 0.05, 0.95);
  return ProductSpace(std::move(p));
}

}  // namespace lowtail::test
