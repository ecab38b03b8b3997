#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lowtail/dependency.hpp"
#include "lowtail/model.hpp"
#include "lowtail/prob.hpp"

namespace lowtail {

// Chernoff-type rate function (1+x) ln(1+x) - x on [-1, inf), with the
// continuous extension phi(-1) = 1. Throws std::domain_error below -1.
double phi(double x);

struct PerEvent {
  double prob;
  double weight;
};

// The scalar ingredients every bound is built from:
//   mu        = sum of c_i Pr(A_i)
//   delta     = sum over ordered dependent pairs of Pr(A_i and A_j)
//   eps       = max_i Pr(A_i) (unweighted probabilities)
//   delta_bar = sum of c_i^2 Pr(A_i) + sum over ordered dependent pairs of
//               c_i c_j Pr(A_i and A_j); equals mu + delta when all c_i = 1
struct Summary {
  double mu = 0.0;
  double delta = 0.0;
  double eps = 0.0;
  double delta_bar = 0.0;
  std::vector<PerEvent> per_event;
  bool weighted = false;
  Method method = Method::exact;
  double max_std_error = 0.0;
};

Summary summarize(const EventFamily& family, const DependencyRelation& rel, const ProbConfig& cfg);

// Pr(X = 0) <= exp(-mu + delta/2). Unweighted families only.
double bound_i1(const Summary& s);

// Pr(X <= mu - t) <= exp(-phi(-t/mu) mu^2 / (mu + delta))
//                 <= exp(-t^2 / (2 (mu + delta)))   for 0 <= t <= mu.
// Returns (phi form, quadratic form). Unweighted families only.
std::pair<double, double> bound_i2(const Summary& s, double t);

// Pr(X = 0) <= prod(1 - Pr(A_i)) exp(delta / (2 (1 - eps))).
// Unweighted families only; returns 0 when eps = 1.
double bound_i1a(const Summary& s);

// Weighted analogue of bound_i2 with delta_bar in place of mu + delta.
std::pair<double, double> bound_i2e(const Summary& s, double t);

// Pr(X = 0) >= prod(1 - Pr(A_i)), the sharpness floor.
double lower_bound(const Summary& s);

struct I2aResult {
  double value = 1.0;            // exp(-sum of expectations)
  double sum_expectations = 0.0; // sum over i of E(J_i / (J_i + dependent J_j sum))
  Method method = Method::exact;
  double sum_std_error = 0.0;
};

// log Pr(X = 0) <= -sum_i E(J_i / (J_i + sum over j ~ i of J_j)), with the
// ratio read as 0 off A_i. Each expectation is enumerated over the joint
// support of A_i and its neighbors, or estimated by Monte Carlo when that
// support exceeds the cap.
I2aResult bound_i2a(const EventFamily& family, const DependencyRelation& rel, const ProbConfig& cfg);

struct BoundValue {
  double raw = 1.0;
  double clamped = 1.0;  // min(raw, 1)
};

struct GridRow {
  double frac = 0.0;  // t as a fraction of mu
  double t = 0.0;
  bool has_i2 = false;  // unweighted families only
  BoundValue i2_phi, i2_quad;
  BoundValue i2e_phi, i2e_quad;
};

// Every applicable bound evaluated on a t-grid given as fractions of mu.
struct BoundReport {
  Summary summary;
  bool weighted = false;
  std::optional<BoundValue> i1;   // absent for weighted families
  std::optional<BoundValue> i1a;  // absent for weighted families
  BoundValue i2a;
  Method i2a_method = Method::exact;
  double i2a_sum = 0.0;
  double lower = 1.0;
  std::vector<GridRow> grid;
};

inline constexpr std::array<double, 4> kDefaultTGrid{0.25, 0.5, 0.75, 1.0};

BoundReport make_bound_report(const EventFamily& family, const DependencyRelation& rel,
                              std::span<const double> t_fracs, const ProbConfig& cfg);

}  // namespace lowtail
