#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace lowtail {

// A min-set is a bitmask of 0-based coordinate indices.
using MinSet = std::uint64_t;

// Min-sets are machine-word bitmasks, so spaces have at most 64 coordinates.
inline constexpr std::size_t kMaxCoordinates = 64;

// Canonical min-set order: by cardinality, then numeric value.
inline bool minset_less(MinSet a, MinSet b) noexcept {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

MinSet mask_from_indices(std::span<const std::size_t> indices);
MinSet mask_from_indices(std::initializer_list<std::size_t> indices);
std::vector<std::size_t> indices_from_mask(MinSet mask);

// Finite product space {0,1}^n with independent coordinates.
class ProductSpace {
 public:
  ProductSpace() = default;
  explicit ProductSpace(std::vector<double> probs);

  static ProductSpace uniform(std::size_t n, double p);

  std::size_t size() const noexcept { return p_.size(); }
  double p(std::size_t coord) const { return p_[coord]; }
  std::span<const double> probs() const noexcept { return p_; }

 private:
  std::vector<double> p_;
};

// Monotone (increasing) event stored as the canonical antichain of its
// min-sets, i.e. a minimal monotone DNF. An outcome belongs to the event iff
// some min-set is all-ones in it. No min-sets encodes the impossible event;
// the single empty min-set encodes the sure event.
class UpSet {
 public:
  UpSet() = default;  // impossible event

  static UpSet impossible() { return UpSet(); }
  static UpSet sure();
  static UpSet principal(MinSet coords);

  const std::vector<MinSet>& minsets() const noexcept { return minsets_; }
  MinSet support() const noexcept { return support_; }
  int support_size() const noexcept { return std::popcount(support_); }

  bool is_impossible() const noexcept { return minsets_.empty(); }
  bool is_sure() const noexcept { return minsets_.size() == 1 && minsets_[0] == 0; }

  bool contains(MinSet omega) const noexcept;

  friend bool operator==(const UpSet&, const UpSet&) = default;

 private:
  struct canonical_tag {};
  UpSet(canonical_tag, std::vector<MinSet> minsets);

  friend UpSet canonicalize(std::vector<MinSet> minsets);
  friend UpSet restrict(const UpSet& a, std::size_t coord, bool value);

  std::vector<MinSet> minsets_;  // antichain, sorted by (popcount, value)
  MinSet support_ = 0;
};

// Antichain reduction: drops duplicates and supersets. Semantics unchanged.
UpSet canonicalize(std::vector<MinSet> minsets);

// Lattice operations; operands must live over the same space.
UpSet intersect(const UpSet& a, const UpSet& b);
UpSet unite(const UpSet& a, const UpSet& b);

// Pin one coordinate; the result reads over the remaining coordinates
// (indices are unchanged).
UpSet restrict(const UpSet& a, std::size_t coord, bool value);

// Events A_1..A_k over one space with positive weights (default all 1).
class EventFamily {
 public:
  EventFamily(ProductSpace space, std::vector<UpSet> events);
  EventFamily(ProductSpace space, std::vector<UpSet> events, std::vector<double> weights);

  const ProductSpace& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return events_.size(); }
  const UpSet& event(std::size_t i) const { return events_[i]; }
  const std::vector<UpSet>& events() const noexcept { return events_; }
  double weight(std::size_t i) const { return weights_[i]; }
  std::span<const double> weights() const noexcept { return weights_; }
  bool unweighted() const noexcept { return unweighted_; }
  MinSet joint_support() const noexcept { return joint_support_; }

 private:
  void validate() const;

  ProductSpace space_;
  std::vector<UpSet> events_;
  std::vector<double> weights_;
  MinSet joint_support_ = 0;
  bool unweighted_ = true;
};

}  // namespace lowtail
