#include "lowtail/prob.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "lowtail/errors.hpp"
#include "lowtail/rng.hpp"

namespace lowtail {
namespace {

struct MinSetVecHash {
  std::size_t operator()(const std::vector<MinSet>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (MinSet m : v) {
      h ^= static_cast<std::size_t>(m);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Support coordinate appearing in the most min-sets; ties to the lowest index.
std::size_t branch_coordinate(const UpSet& a) {
  std::size_t best = 0;
  int best_hits = -1;
  for (MinSet rest = a.support(); rest != 0; rest &= rest - 1) {
    const std::size_t x = static_cast<std::size_t>(std::countr_zero(rest));
    int hits = 0;
    for (MinSet m : a.minsets()) hits += static_cast<int>((m >> x) & 1);
    if (hits > best_hits) {
      best_hits = hits;
      best = x;
    }
  }
  return best;
}

// Shannon expansion with the canonical restricted DNF as memo key.
class ShannonEvaluator {
 public:
  explicit ShannonEvaluator(const ProductSpace& space) : space_(space) {}

  double eval(const UpSet& a) {
    if (a.is_impossible()) return 0.0;
    if (a.is_sure()) return 1.0;
    if (auto it = memo_.find(a.minsets()); it != memo_.end()) return it->second;
    const std::size_t x = branch_coordinate(a);
    const double px = space_.p(x);
    const double on = px > 0.0 ? eval(restrict(a, x, true)) : 0.0;
    const double off = px < 1.0 ? eval(restrict(a, x, false)) : 0.0;
    const double value = px * on + (1.0 - px) * off;
    memo_.emplace(a.minsets(), value);
    return value;
  }

 private:
  const ProductSpace& space_;
  std::unordered_map<std::vector<MinSet>, double, MinSetVecHash> memo_;
};

}  // namespace

double exact_prob(const UpSet& a, const ProductSpace& space, int max_exact_support) {
  if (a.support_size() > max_exact_support) {
    throw TooLargeForExact(a.support_size(), max_exact_support);
  }
  return ShannonEvaluator(space).eval(a);
}

ProbValue mc_prob(const UpSet& a, const ProductSpace& space, std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("mc_prob requires at least one sample");
  const std::vector<std::size_t> coords = indices_from_mask(a.support());
  std::mt19937_64 rng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    MinSet omega = 0;
    for (std::size_t c : coords) {
      if (uniform01(rng) < space.p(c)) omega |= MinSet{1} << c;
    }
    hits += a.contains(omega) ? 1 : 0;
  }
  const double value = static_cast<double>(hits) / static_cast<double>(samples);
  const double se = std::sqrt(value * (1.0 - value) / static_cast<double>(samples));
  return ProbValue{value, Method::monte_carlo, se};
}

ProbValue prob(const UpSet& a, const ProductSpace& space, const ProbConfig& cfg) {
  if (a.support_size() <= cfg.max_exact_support) {
    return ProbValue{exact_prob(a, space, cfg.max_exact_support), Method::exact, 0.0};
  }
  if (cfg.mc_samples > 0) {
    return mc_prob(a, space, cfg.mc_samples, cfg.seed);
  }
  throw TooLargeForExact(a.support_size(), cfg.max_exact_support);
}

ProbValue pair_prob(const UpSet& a, const UpSet& b, const ProductSpace& space, const ProbConfig& cfg) {
  if ((a.support() & b.support()) == 0) {
    const ProbValue pa = prob(a, space, cfg);
    const ProbValue pb = prob(b, space, cfg);
    ProbValue out;
    out.value = pa.value * pb.value;
    if (pa.method == Method::exact && pb.method == Method::exact) {
      out.method = Method::exact;
    } else {
      out.method = Method::monte_carlo;
      out.std_error = std::sqrt(pa.value * pa.value * pb.std_error * pb.std_error +
                                pb.value * pb.value * pa.std_error * pa.std_error +
                                pa.std_error * pa.std_error * pb.std_error * pb.std_error);
    }
    return out;
  }
  return prob(intersect(a, b), space, cfg);
}

}  // namespace lowtail
