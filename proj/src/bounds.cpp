#include "lowtail/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lowtail/enumeration.hpp"
#include "lowtail/errors.hpp"
#include "lowtail/rng.hpp"

namespace lowtail {

double phi(double x) {
  if (x < -1.0) throw std::domain_error("phi is defined on [-1, inf)");
  if (x == -1.0) return 1.0;
  if (std::abs(x) < 1e-8) return x * x / 2.0 - x * x * x / 6.0;
  return (1.0 + x) * std::log1p(x) - x;
}

Summary summarize(const EventFamily& family, const DependencyRelation& rel, const ProbConfig& cfg) {
  Summary s;
  const std::size_t k = family.size();
  s.per_event.reserve(k);
  auto absorb = [&s](const ProbValue& p) {
    if (p.method == Method::monte_carlo) s.method = Method::monte_carlo;
    s.max_std_error = std::max(s.max_std_error, p.std_error);
  };

  for (std::size_t i = 0; i < k; ++i) {
    const ProbValue p = prob(family.event(i), family.space(), cfg);
    absorb(p);
    const double c = family.weight(i);
    s.per_event.push_back(PerEvent{p.value, c});
    s.mu += c * p.value;
    s.eps = std::max(s.eps, p.value);
    s.delta_bar += c * c * p.value;
    if (c != 1.0) s.weighted = true;
  }
  for (const auto& [i, j] : rel.pairs()) {
    const ProbValue pij = pair_prob(family.event(i), family.event(j), family.space(), cfg);
    absorb(pij);
    // Ordered-pair convention: each unordered dependent pair counts twice.
    s.delta += 2.0 * pij.value;
    s.delta_bar += 2.0 * family.weight(i) * family.weight(j) * pij.value;
  }
  return s;
}

namespace {

void require_unweighted(const Summary& s, const char* name) {
  if (s.weighted) {
    throw std::invalid_argument(std::string(name) +
                                " applies to unweighted families; use bound_i2e or the weighted bound_i2a");
  }
}

double check_t_range(double t, double mu) {
  // Absorb roundoff from t = frac * mu at frac = 1.
  const double slack = 1e-12 * std::max(1.0, mu);
  if (t < -slack || t > mu + slack) {
    throw std::domain_error("t = " + std::to_string(t) + " is outside [0, mu] with mu = " + std::to_string(mu));
  }
  return std::clamp(t, 0.0, mu);
}

BoundValue make_value(double raw) { return BoundValue{raw, std::min(raw, 1.0)}; }

}  // namespace

double bound_i1(const Summary& s) {
  require_unweighted(s, "bound_i1");
  return std::exp(-s.mu + s.delta / 2.0);
}

std::pair<double, double> bound_i2(const Summary& s, double t) {
  require_unweighted(s, "bound_i2");
  t = check_t_range(t, s.mu);
  if (s.mu == 0.0) return {1.0, 1.0};
  const double denom = s.mu + s.delta;
  return {std::exp(-phi(-t / s.mu) * s.mu * s.mu / denom), std::exp(-t * t / (2.0 * denom))};
}

double bound_i1a(const Summary& s) {
  require_unweighted(s, "bound_i1a");
  if (s.eps >= 1.0) return 0.0;  // some Pr(A_i) = 1 forces Pr(X = 0) = 0
  double product = 1.0;
  for (const PerEvent& e : s.per_event) product *= 1.0 - e.prob;
  return product * std::exp(s.delta / (2.0 * (1.0 - s.eps)));
}

std::pair<double, double> bound_i2e(const Summary& s, double t) {
  t = check_t_range(t, s.mu);
  if (s.mu == 0.0) return {1.0, 1.0};
  return {std::exp(-phi(-t / s.mu) * s.mu * s.mu / s.delta_bar), std::exp(-t * t / (2.0 * s.delta_bar))};
}

double lower_bound(const Summary& s) {
  double product = 1.0;
  for (const PerEvent& e : s.per_event) product *= 1.0 - e.prob;
  return product;
}

namespace {

// E(J_i / (J_i + sum of dependent J_j)) by enumeration over the joint
// support of A_i and its neighbors.
double neighborhood_expectation_exact(const EventFamily& family, const DependencyRelation& rel, std::size_t i,
                                      MinSet joint) {
  const SupportEnumeration en(joint, family.space());
  const auto self = en.localize(family.event(i));
  std::vector<std::vector<std::uint64_t>> nbr_events;
  std::vector<double> nbr_weights;
  for (std::size_t j : rel.neighbors(i)) {
    nbr_events.push_back(en.localize(family.event(j)));
    nbr_weights.push_back(family.weight(j));
  }
  const double ci = family.weight(i);
  double acc = 0.0;
  for (std::uint64_t omega = 0; omega < en.count(); ++omega) {
    if (!SupportEnumeration::holds(self, omega)) continue;  // ratio is 0 off A_i
    double denom = ci;
    for (std::size_t j = 0; j < nbr_events.size(); ++j) {
      if (SupportEnumeration::holds(nbr_events[j], omega)) denom += nbr_weights[j];
    }
    acc += en.weight(omega) * ci / denom;
  }
  return acc;
}

struct McExpectation {
  double mean;
  double std_error;
};

McExpectation neighborhood_expectation_mc(const EventFamily& family, const DependencyRelation& rel, std::size_t i,
                                          MinSet joint, const ProbConfig& cfg) {
  const std::vector<std::size_t> coords = indices_from_mask(joint);
  std::mt19937_64 rng(derive_seed(cfg.seed, i));
  const double ci = family.weight(i);
  double sum = 0.0, sumsq = 0.0;
  for (std::uint64_t n = 0; n < cfg.mc_samples; ++n) {
    MinSet omega = 0;
    for (std::size_t c : coords) {
      if (uniform01(rng) < family.space().p(c)) omega |= MinSet{1} << c;
    }
    double value = 0.0;
    if (family.event(i).contains(omega)) {
      double denom = ci;
      for (std::size_t j : rel.neighbors(i)) {
        if (family.event(j).contains(omega)) denom += family.weight(j);
      }
      value = ci / denom;
    }
    sum += value;
    sumsq += value * value;
  }
  const double n = static_cast<double>(cfg.mc_samples);
  const double mean = sum / n;
  const double var = std::max(0.0, sumsq / n - mean * mean);
  return McExpectation{mean, std::sqrt(var / n)};
}

}  // namespace

I2aResult bound_i2a(const EventFamily& family, const DependencyRelation& rel, const ProbConfig& cfg) {
  I2aResult out;
  double var_sum = 0.0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    MinSet joint = family.event(i).support();
    for (std::size_t j : rel.neighbors(i)) joint |= family.event(j).support();
    if (std::popcount(joint) <= cfg.max_exact_support) {
      out.sum_expectations += neighborhood_expectation_exact(family, rel, i, joint);
    } else if (cfg.mc_samples > 0) {
      const McExpectation e = neighborhood_expectation_mc(family, rel, i, joint, cfg);
      out.sum_expectations += e.mean;
      var_sum += e.std_error * e.std_error;
      out.method = Method::monte_carlo;
    } else {
      throw TooLargeForExact(std::popcount(joint), cfg.max_exact_support);
    }
  }
  out.sum_std_error = std::sqrt(var_sum);
  out.value = std::exp(-out.sum_expectations);
  return out;
}

BoundReport make_bound_report(const EventFamily& family, const DependencyRelation& rel,
                              std::span<const double> t_fracs, const ProbConfig& cfg) {
  BoundReport report;
  report.summary = summarize(family, rel, cfg);
  report.weighted = report.summary.weighted;

  if (!report.weighted) {
    report.i1 = make_value(bound_i1(report.summary));
    report.i1a = make_value(bound_i1a(report.summary));
  }
  const I2aResult i2a = bound_i2a(family, rel, cfg);
  report.i2a = make_value(i2a.value);
  report.i2a_method = i2a.method;
  report.i2a_sum = i2a.sum_expectations;
  report.lower = lower_bound(report.summary);

  report.grid.reserve(t_fracs.size());
  for (double frac : t_fracs) {
    GridRow row;
    row.frac = frac;
    row.t = frac * report.summary.mu;
    if (!report.weighted) {
      const auto [p, q] = bound_i2(report.summary, row.t);
      row.has_i2 = true;
      row.i2_phi = make_value(p);
      row.i2_quad = make_value(q);
    }
    const auto [pe, qe] = bound_i2e(report.summary, row.t);
    row.i2e_phi = make_value(pe);
    row.i2e_quad = make_value(qe);
    report.grid.push_back(row);
  }
  return report;
}

}  // namespace lowtail
