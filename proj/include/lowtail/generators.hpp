#pragma once

#include <cstdint>
#include <string>

#include "lowtail/instance.hpp"

namespace lowtail {

// Per-coordinate success probabilities: one fixed value, or seeded draws
// from [lo, hi].
struct ProbSpec {
  double fixed = 0.5;
  bool random = false;
  double lo = 0.1;
  double hi = 0.9;
};

// Event weights: all 1, or seeded draws from [lo, hi].
struct WeightSpec {
  bool random = false;
  double lo = 0.5;
  double hi = 3.0;
};

// One principal event per copy of the named graph in K_n; coordinates are
// the edges of K_n in lexicographic order. Graphs: edge, path2, triangle,
// c4, k4.
Instance generate_subgraph_count(const std::string& graph, std::size_t n, const ProbSpec& prob,
                                 const WeightSpec& weights, std::uint64_t seed);

// k at-least-m-of-r events, each on a seeded random r-subset of the n
// coordinates; m = 0 selects majority (floor(r/2) + 1). Non-principal
// whenever m < r.
Instance generate_threshold(std::size_t n, std::size_t k, std::size_t r, std::size_t m, const ProbSpec& prob,
                            const WeightSpec& weights, std::uint64_t seed);

// k random monotone-DNF events: per event, a number of min-sets drawn from
// [minsets_lo, minsets_hi], each a random subset of size drawn from
// [size_lo, size_hi], canonicalized.
Instance generate_random_dnf(std::size_t n, std::size_t k, std::size_t minsets_lo, std::size_t minsets_hi,
                             std::size_t size_lo, std::size_t size_hi, const ProbSpec& prob,
                             const WeightSpec& weights, std::uint64_t seed);

// Edge (u, v), u < v, of K_n in lexicographic order.
std::size_t edge_index(std::size_t u, std::size_t v, std::size_t n);

}  // namespace lowtail
