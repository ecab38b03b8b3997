#include "lowtail/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "lowtail/enumeration.hpp"
#include "lowtail/errors.hpp"
#include "lowtail/prob.hpp"

namespace lowtail {

namespace {

SupportEnumeration family_enumeration(const EventFamily& family, int max_exact_support) {
  const int m = std::popcount(family.joint_support());
  if (m > max_exact_support) throw TooLargeForExact(m, max_exact_support);
  return SupportEnumeration(family.joint_support(), family.space());
}

std::vector<std::vector<std::uint64_t>> localize_events(const SupportEnumeration& en, const EventFamily& family) {
  std::vector<std::vector<std::uint64_t>> out;
  out.reserve(family.size());
  for (const UpSet& e : family.events()) out.push_back(en.localize(e));
  return out;
}

}  // namespace

ExactDistribution::ExactDistribution(std::vector<std::pair<double, double>> atoms, int coords_enumerated)
    : atoms_(std::move(atoms)), coords_enumerated_(coords_enumerated) {}

double ExactDistribution::total_mass() const {
  double sum = 0.0;
  for (const auto& [v, p] : atoms_) sum += p;
  return sum;
}

double ExactDistribution::mean() const {
  double sum = 0.0;
  for (const auto& [v, p] : atoms_) sum += v * p;
  return sum;
}

double ExactDistribution::lower_tail(double threshold) const {
  double sum = 0.0;
  for (const auto& [v, p] : atoms_) {
    if (v <= threshold + 1e-12) sum += p;
  }
  return sum;
}

ExactDistribution enumerate_distribution(const EventFamily& family, int max_exact_support) {
  const SupportEnumeration en = family_enumeration(family, max_exact_support);
  const auto events = localize_events(en, family);
  const std::size_t k = family.size();

  if (family.unweighted()) {
    // X is the plain count of occurring events.
    std::vector<double> by_count(k + 1, 0.0);
    for (std::uint64_t omega = 0; omega < en.count(); ++omega) {
      std::size_t hits = 0;
      for (std::size_t i = 0; i < k; ++i) hits += SupportEnumeration::holds(events[i], omega) ? 1 : 0;
      by_count[hits] += en.weight(omega);
    }
    std::vector<std::pair<double, double>> atoms;
    for (std::size_t c = 0; c <= k; ++c) {
      if (by_count[c] > 0.0) atoms.emplace_back(static_cast<double>(c), by_count[c]);
    }
    return ExactDistribution(std::move(atoms), en.m());
  }

  std::map<double, double> by_value;
  for (std::uint64_t omega = 0; omega < en.count(); ++omega) {
    double x = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      if (SupportEnumeration::holds(events[i], omega)) x += family.weight(i);
    }
    by_value[x] += en.weight(omega);
  }
  std::vector<std::pair<double, double>> atoms;
  for (const auto& [v, p] : by_value) {
    if (p > 0.0) atoms.emplace_back(v, p);
  }
  return ExactDistribution(std::move(atoms), en.m());
}

double enumeration_prob(const UpSet& a, const ProductSpace& space, int max_exact_support) {
  if (a.support_size() > max_exact_support) throw TooLargeForExact(a.support_size(), max_exact_support);
  const SupportEnumeration en(a.support(), space);
  const auto minsets = en.localize(a);
  double sum = 0.0;
  for (std::uint64_t omega = 0; omega < en.count(); ++omega) {
    if (SupportEnumeration::holds(minsets, omega)) sum += en.weight(omega);
  }
  return sum;
}

AimReport check_aim(const EventFamily& family, const DependencyRelation& rel,
                    std::span<const std::size_t> ordering, double tol, int max_exact_support) {
  const std::size_t k = family.size();
  if (ordering.size() != k) throw std::invalid_argument("ordering must be a permutation of the event indices");
  const SupportEnumeration en = family_enumeration(family, max_exact_support);
  const auto events = localize_events(en, family);

  // Mass of outcomes by the first ordering position whose event occurs
  // (position k: none occurs).
  std::vector<double> first_hit(k + 1, 0.0);
  for (std::uint64_t omega = 0; omega < en.count(); ++omega) {
    std::size_t idx = k;
    for (std::size_t pos = 0; pos < k; ++pos) {
      if (SupportEnumeration::holds(events[ordering[pos]], omega)) {
        idx = pos;
        break;
      }
    }
    first_hit[idx] += en.weight(omega);
  }
  std::vector<double> tail(k + 2, 0.0);  // tail[pos] = Pr(no event at positions < pos)
  for (std::size_t pos = k + 1; pos-- > 0;) {
    tail[pos] = first_hit[pos] + tail[pos + 1];
  }

  AimReport report;
  report.tol = tol;
  report.worst_slack = std::numeric_limits<double>::infinity();
  for (std::size_t pos = 0; pos < k; ++pos) {
    const std::size_t e = ordering[pos];
    AimEntry entry{pos, e, false, 0.0, 0.0, 0.0};
    if (tail[pos] <= 0.0) {
      entry.skipped = true;  // Pr(X = 0) is already zero past this prefix
      report.entries.push_back(entry);
      continue;
    }
    entry.conditional = first_hit[pos] / tail[pos];
    double floor_value = exact_prob(family.event(e), family.space(), max_exact_support);
    for (std::size_t prev = 0; prev < pos; ++prev) {
      const std::size_t j = ordering[prev];
      if (rel.related(e, j)) {
        floor_value -=
            exact_prob(intersect(family.event(e), family.event(j)), family.space(), max_exact_support);
      }
    }
    entry.floor_value = floor_value;
    entry.slack = entry.conditional - floor_value;
    report.worst_slack = std::min(report.worst_slack, entry.slack);
    if (entry.slack < -tol) report.pass = false;
    report.entries.push_back(entry);
  }
  if (!std::isfinite(report.worst_slack)) report.worst_slack = 0.0;
  return report;
}

Aim2Report check_aim2(const EventFamily& family, const DependencyRelation& rel,
                      std::span<const double> s_grid, double tol, int max_exact_support) {
  for (double s : s_grid) {
    if (!(s >= 0.0)) throw std::invalid_argument("s grid values must be nonnegative");
  }
  const std::size_t k = family.size();
  const std::size_t ns = s_grid.size();
  const SupportEnumeration en = family_enumeration(family, max_exact_support);
  const auto events = localize_events(en, family);

  std::vector<double> ex(ns, 0.0);                 // E(e^{-sX})
  std::vector<double> lhs(k * ns, 0.0);            // E(J_i e^{-sX})
  std::vector<double> rhs_self(k * ns, 0.0);       // E(J_i e^{-sY_i})
  std::vector<char> holding(k, 0);
  for (std::uint64_t omega = 0; omega < en.count(); ++omega) {
    const double w = en.weight(omega);
    double x = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      holding[i] = SupportEnumeration::holds(events[i], omega) ? 1 : 0;
      if (holding[i]) x += family.weight(i);
    }
    for (std::size_t si = 0; si < ns; ++si) {
      const double ex_x = std::exp(-s_grid[si] * x);
      ex[si] += w * ex_x;
      for (std::size_t i = 0; i < k; ++i) {
        if (!holding[i]) continue;
        lhs[i * ns + si] += w * family.weight(i) * ex_x;
        double y = family.weight(i);
        for (std::size_t j : rel.neighbors(i)) {
          if (holding[j]) y += family.weight(j);
        }
        rhs_self[i * ns + si] += w * family.weight(i) * std::exp(-s_grid[si] * y);
      }
    }
  }

  Aim2Report report;
  report.tol = tol;
  report.worst_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t si = 0; si < ns; ++si) {
      Aim2Entry entry{i, s_grid[si], lhs[i * ns + si], rhs_self[i * ns + si] * ex[si], 0.0};
      entry.slack = entry.lhs - entry.rhs;
      report.worst_slack = std::min(report.worst_slack, entry.slack);
      if (entry.slack < -tol) report.pass = false;
      report.entries.push_back(entry);
    }
  }
  if (!std::isfinite(report.worst_slack)) report.worst_slack = 0.0;
  return report;
}

AxiomsReport check_axioms(const ProductSpace& space, std::span<const std::pair<UpSet, UpSet>> pairs,
                          std::span<const std::array<UpSet, 3>> triples, double tol, int max_exact_support) {
  AxiomsReport report;
  report.tol = tol;

  for (const auto& [a, b] : pairs) {
    const MinSet joint = a.support() | b.support();
    if (std::popcount(joint) > max_exact_support) throw TooLargeForExact(std::popcount(joint), max_exact_support);
    const SupportEnumeration en(joint, space);
    const auto la = en.localize(a);
    const auto lb = en.localize(b);
    const UpSet meet = intersect(a, b);
    const UpSet join = unite(a, b);
    const auto lmeet = en.localize(meet);
    const auto ljoin = en.localize(join);

    double pa = 0.0, pb = 0.0, pab = 0.0;
    for (std::uint64_t omega = 0; omega < en.count(); ++omega) {
      const double w = en.weight(omega);
      const bool ha = SupportEnumeration::holds(la, omega);
      const bool hb = SupportEnumeration::holds(lb, omega);
      if (ha) pa += w;
      if (hb) pb += w;
      if (ha && hb) pab += w;
      if (SupportEnumeration::holds(lmeet, omega) != (ha && hb)) ++report.lattice_mismatches;
      if (SupportEnumeration::holds(ljoin, omega) != (ha || hb)) ++report.lattice_mismatches;
    }
    report.worst_harris_violation = std::max(report.worst_harris_violation, pa * pb - pab);
    ++report.pairs_checked;
  }

  for (const auto& [a, b, c] : triples) {
    const double p_meet = enumeration_prob(intersect(a, intersect(b, c)), space, max_exact_support);
    const double p_join = enumeration_prob(intersect(a, unite(b, c)), space, max_exact_support);
    const double p_ab = enumeration_prob(intersect(a, b), space, max_exact_support);
    const double p_ac = enumeration_prob(intersect(a, c), space, max_exact_support);
    report.worst_e1_violation = std::max(report.worst_e1_violation, std::abs(p_meet + p_join - p_ab - p_ac));
    if ((a.support() & (b.support() | c.support())) == 0) {
      const double pa = enumeration_prob(a, space, max_exact_support);
      const double pb = enumeration_prob(b, space, max_exact_support);
      const double pc = enumeration_prob(c, space, max_exact_support);
      report.worst_product_violation =
          std::max(report.worst_product_violation, std::abs(p_meet + p_join - pa * (pb + pc)));
    }
    ++report.triples_checked;
  }

  if (report.worst_harris_violation > tol || report.lattice_mismatches > 0 ||
      report.worst_e1_violation > tol || report.worst_product_violation > tol) {
    report.pass = false;
  }
  return report;
}

}  // namespace lowtail
