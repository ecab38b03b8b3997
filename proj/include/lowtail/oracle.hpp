#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lowtail/dependency.hpp"
#include "lowtail/model.hpp"

namespace lowtail {

// Exact law of X = sum of c_i I_i, enumerated over the support coordinates.
// Atom values are sums of weight subsets accumulated in ascending event
// order, so equal sums land on identical doubles.
class ExactDistribution {
 public:
  ExactDistribution(std::vector<std::pair<double, double>> atoms, int coords_enumerated);

  std::span<const std::pair<double, double>> atoms() const noexcept { return atoms_; }
  int coords_enumerated() const noexcept { return coords_enumerated_; }

  double total_mass() const;
  double mean() const;
  double prob_zero() const { return lower_tail(0.0); }
  // Mass of { X <= threshold + 1e-12 }.
  double lower_tail(double threshold) const;

 private:
  std::vector<std::pair<double, double>> atoms_;  // (value, probability), ascending value
  int coords_enumerated_;
};

ExactDistribution enumerate_distribution(const EventFamily& family, int max_exact_support = 25);

// Brute-force Pr(A): direct sum over all assignments of the support.
// Independent of the Shannon-expansion engine by construction.
double enumeration_prob(const UpSet& a, const ProductSpace& space, int max_exact_support = 25);

// One row of the sequential-conditioning check: the conditional probability
// of the event at this position given that no earlier event (in the given
// ordering) occurs, against its pair-probability floor.
struct AimEntry {
  std::size_t position;
  std::size_t event;
  bool skipped;        // the conditioning prefix has probability zero
  double conditional;  // r = Pr(A_e | no earlier event occurs)
  double floor_value;  // Pr(A_e) - sum of earlier dependent joint probabilities
  double slack;        // conditional - floor_value
};

struct AimReport {
  bool pass = true;
  double tol = 0.0;
  double worst_slack = 0.0;
  std::vector<AimEntry> entries;
};

AimReport check_aim(const EventFamily& family, const DependencyRelation& rel,
                    std::span<const std::size_t> ordering, double tol = 1e-9, int max_exact_support = 25);

inline constexpr std::array<double, 6> kDefaultSGrid{0.0, 0.1, 0.5, 1.0, 2.0, 5.0};

// One row of the exponential-correlation check: E(J_i e^{-sX}) against
// E(J_i e^{-sY_i}) E(e^{-sX}), where Y_i collects J_i and its dependent
// terms and J_i = c_i I_i.
struct Aim2Entry {
  std::size_t event;
  double s;
  double lhs;
  double rhs;
  double slack;
};

struct Aim2Report {
  bool pass = true;
  double tol = 0.0;
  double worst_slack = 0.0;
  std::vector<Aim2Entry> entries;
};

Aim2Report check_aim2(const EventFamily& family, const DependencyRelation& rel,
                      std::span<const double> s_grid = kDefaultSGrid, double tol = 1e-9,
                      int max_exact_support = 25);

// Positive correlation, lattice-operation semantics, and the two-event
// decomposition identity, all against brute-force enumeration.
struct AxiomsReport {
  bool pass = true;
  double tol = 0.0;
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;
  double worst_harris_violation = 0.0;  // max(0, Pr(A)Pr(B) - Pr(A and B))
  std::size_t lattice_mismatches = 0;   // outcomes where intersect/unite disagree with and/or
  double worst_e1_violation = 0.0;      // |Pr(A(BC)) + Pr(A(B or C)) - Pr(AB) - Pr(AC)|
  double worst_product_violation = 0.0; // independent triples: |... - Pr(A)(Pr(B)+Pr(C))|
};

AxiomsReport check_axioms(const ProductSpace& space, std::span<const std::pair<UpSet, UpSet>> pairs,
                          std::span<const std::array<UpSet, 3>> triples, double tol = 1e-9,
                          int max_exact_support = 25);

}  // namespace lowtail
