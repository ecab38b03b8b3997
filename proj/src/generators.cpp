#include "lowtail/generators.hpp"

#include <algorithm>
#include <stdexcept>

#include "lowtail/rng.hpp"

namespace lowtail {

namespace {

ProductSpace make_space(std::size_t n, const ProbSpec& prob, std::mt19937_64& rng) {
  std::vector<double> p(n, prob.fixed);
  if (prob.random) {
    for (double& v : p) v = uniform_range(rng, prob.lo, prob.hi);
  }
  return ProductSpace(std::move(p));
}

std::vector<double> make_weights(std::size_t k, const WeightSpec& weights, std::mt19937_64& rng) {
  std::vector<double> c(k, 1.0);
  if (weights.random) {
    for (double& v : c) v = uniform_range(rng, weights.lo, weights.hi);
  }
  return c;
}

Instance assemble(ProductSpace space, std::vector<UpSet> events, const WeightSpec& weights,
                  std::mt19937_64& rng) {
  std::vector<double> c = make_weights(events.size(), weights, rng);
  return Instance{EventFamily(std::move(space), std::move(events), std::move(c)), DependencySpec{}};
}

void append_combinations(std::size_t n, std::size_t r, std::vector<std::vector<std::size_t>>& out) {
  if (r > n) return;
  if (r == 0) {
    out.emplace_back();
    return;
  }
  // Lexicographic r-combinations of {0..n-1}.
  std::vector<std::size_t> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  for (;;) {
    out.push_back(pick);
    std::size_t i = r;
    while (i-- > 0) {
      if (pick[i] != i + n - r) break;
      if (i == 0) return;
    }
    if (pick[i] == i + n - r) return;
    ++pick[i];
    for (std::size_t j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::size_t edge_index(std::size_t u, std::size_t v, std::size_t n) {
  if (u > v) std::swap(u, v);
  // Edges (0,1), (0,2), ..., (0,n-1), (1,2), ...
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

Instance generate_subgraph_count(const std::string& graph, std::size_t n, const ProbSpec& prob,
                                 const WeightSpec& weights, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("subgraph-count requires n >= 2");
  const std::size_t coords = n * (n - 1) / 2;
  if (coords > kMaxCoordinates) {
    throw std::invalid_argument("K_" + std::to_string(n) + " has " + std::to_string(coords) +
                                " edges, above the coordinate maximum of " + std::to_string(kMaxCoordinates));
  }
  std::mt19937_64 rng(seed);
  ProductSpace space = make_space(coords, prob, rng);

  auto edge = [n](std::size_t u, std::size_t v) { return edge_index(u, v, n); };
  std::vector<UpSet> events;
  std::vector<std::vector<std::size_t>> vertex_sets;

  if (graph == "edge") {
    append_combinations(n, 2, vertex_sets);
    for (const auto& vs : vertex_sets) {
      events.push_back(UpSet::principal(mask_from_indices({edge(vs[0], vs[1])})));
    }
  } else if (graph == "path2") {
    // Center vertex plus an unordered pair of distinct ends.
    for (std::size_t center = 0; center < n; ++center) {
      for (std::size_t a = 0; a < n; ++a) {
        if (a == center) continue;
        for (std::size_t b = a + 1; b < n; ++b) {
          if (b == center) continue;
          events.push_back(UpSet::principal(mask_from_indices({edge(center, a), edge(center, b)})));
        }
      }
    }
  } else if (graph == "triangle") {
    append_combinations(n, 3, vertex_sets);
    for (const auto& vs : vertex_sets) {
      events.push_back(
          UpSet::principal(mask_from_indices({edge(vs[0], vs[1]), edge(vs[0], vs[2]), edge(vs[1], vs[2])})));
    }
  } else if (graph == "c4") {
    // Three distinct 4-cycles per vertex 4-set.
    append_combinations(n, 4, vertex_sets);
    for (const auto& vs : vertex_sets) {
      const std::size_t a = vs[0], b = vs[1], c = vs[2], d = vs[3];
      events.push_back(UpSet::principal(mask_from_indices({edge(a, b), edge(b, c), edge(c, d), edge(d, a)})));
      events.push_back(UpSet::principal(mask_from_indices({edge(a, b), edge(b, d), edge(d, c), edge(c, a)})));
      events.push_back(UpSet::principal(mask_from_indices({edge(a, c), edge(c, b), edge(b, d), edge(d, a)})));
    }
  } else if (graph == "k4") {
    append_combinations(n, 4, vertex_sets);
    for (const auto& vs : vertex_sets) {
      std::vector<std::size_t> edges;
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) edges.push_back(edge(vs[i], vs[j]));
      }
      events.push_back(UpSet::principal(mask_from_indices(edges)));
    }
  } else {
    throw std::invalid_argument("unknown graph '" + graph + "' (choose edge, path2, triangle, c4, or k4)");
  }

  return assemble(std::move(space), std::move(events), weights, rng);
}

Instance generate_threshold(std::size_t n, std::size_t k, std::size_t r, std::size_t m, const ProbSpec& prob,
                            const WeightSpec& weights, std::uint64_t seed) {
  if (n > kMaxCoordinates) throw std::invalid_argument("n exceeds the coordinate maximum");
  if (r == 0 || r > n) throw std::invalid_argument("threshold requires 1 <= r <= n");
  if (m == 0) m = r / 2 + 1;  // majority
  if (m > r) throw std::invalid_argument("threshold requires m <= r");

  std::mt19937_64 rng(seed);
  ProductSpace space = make_space(n, prob, rng);

  std::vector<UpSet> events;
  events.reserve(k);
  for (std::size_t e = 0; e < k; ++e) {
    const std::vector<std::size_t> base = sample_indices(rng, n, r);
    std::vector<std::vector<std::size_t>> subsets;
    append_combinations(r, m, subsets);
    std::vector<MinSet> minsets;
    minsets.reserve(subsets.size());
    for (const auto& sub : subsets) {
      MinSet mask = 0;
      for (std::size_t pos : sub) mask |= MinSet{1} << base[pos];
      minsets.push_back(mask);
    }
    events.push_back(canonicalize(std::move(minsets)));
  }
  return assemble(std::move(space), std::move(events), weights, rng);
}

Instance generate_random_dnf(std::size_t n, std::size_t k, std::size_t minsets_lo, std::size_t minsets_hi,
                             std::size_t size_lo, std::size_t size_hi, const ProbSpec& prob,
                             const WeightSpec& weights, std::uint64_t seed) {
  if (n == 0 || n > kMaxCoordinates) throw std::invalid_argument("random-monotone-dnf requires 1 <= n <= 64");
  if (minsets_lo == 0 || minsets_lo > minsets_hi) {
    throw std::invalid_argument("min-set count range must satisfy 1 <= lo <= hi");
  }
  if (size_lo == 0 || size_lo > size_hi || size_hi > n) {
    throw std::invalid_argument("min-set size range must satisfy 1 <= lo <= hi <= n");
  }

  std::mt19937_64 rng(seed);
  ProductSpace space = make_space(n, prob, rng);

  std::vector<UpSet> events;
  events.reserve(k);
  for (std::size_t e = 0; e < k; ++e) {
    const std::size_t count = minsets_lo + static_cast<std::size_t>(uniform_below(rng, minsets_hi - minsets_lo + 1));
    std::vector<MinSet> minsets;
    minsets.reserve(count);
    for (std::size_t ms = 0; ms < count; ++ms) {
      const std::size_t size = size_lo + static_cast<std::size_t>(uniform_below(rng, size_hi - size_lo + 1));
      minsets.push_back(mask_from_indices(sample_indices(rng, n, size)));
    }
    events.push_back(canonicalize(std::move(minsets)));
  }
  return assemble(std::move(space), std::move(events), weights, rng);
}

}  // namespace lowtail
