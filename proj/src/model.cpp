#include "lowtail/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lowtail {

MinSet mask_from_indices(std::span<const std::size_t> indices) {
  MinSet mask = 0;
  for (std::size_t i : indices) {
    if (i >= kMaxCoordinates) {
      throw std::out_of_range("coordinate index " + std::to_string(i) + " exceeds the supported maximum of " +
                              std::to_string(kMaxCoordinates - 1));
    }
    mask |= MinSet{1} << i;
  }
  return mask;
}

MinSet mask_from_indices(std::initializer_list<std::size_t> indices) {
  return mask_from_indices(std::span<const std::size_t>(indices.begin(), indices.size()));
}

std::vector<std::size_t> indices_from_mask(MinSet mask) {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  for (MinSet rest = mask; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

ProductSpace::ProductSpace(std::vector<double> probs) : p_(std::move(probs)) {
  if (p_.size() > kMaxCoordinates) {
    throw std::invalid_argument("coordinate count " + std::to_string(p_.size()) + " exceeds the supported maximum of " +
                                std::to_string(kMaxCoordinates));
  }
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (!(p_[i] >= 0.0 && p_[i] <= 1.0)) {
      throw std::invalid_argument("p[" + std::to_string(i) + "] = " + std::to_string(p_[i]) + " is outside [0, 1]");
    }
  }
}

ProductSpace ProductSpace::uniform(std::size_t n, double p) {
  return ProductSpace(std::vector<double>(n, p));
}

UpSet::UpSet(canonical_tag, std::vector<MinSet> minsets) : minsets_(std::move(minsets)) {
  for (MinSet m : minsets_) support_ |= m;
}

UpSet UpSet::sure() {
  return canonicalize({MinSet{0}});
}

UpSet UpSet::principal(MinSet coords) {
  return canonicalize({coords});
}

bool UpSet::contains(MinSet omega) const noexcept {
  for (MinSet m : minsets_) {
    if ((m & omega) == m) return true;
  }
  return false;
}

UpSet canonicalize(std::vector<MinSet> minsets) {
  std::sort(minsets.begin(), minsets.end(), minset_less);
  minsets.erase(std::unique(minsets.begin(), minsets.end()), minsets.end());

  // Ascending cardinality guarantees any proper subset precedes its supersets.
  std::vector<MinSet> kept;
  kept.reserve(minsets.size());
  for (MinSet m : minsets) {
    bool absorbed = false;
    for (MinSet k : kept) {
      if ((k & m) == k) {
        absorbed = true;
        break;
      }
    }
    if (!absorbed) kept.push_back(m);
  }
  return UpSet(UpSet::canonical_tag{}, std::move(kept));
}

UpSet intersect(const UpSet& a, const UpSet& b) {
  std::vector<MinSet> unions;
  unions.reserve(a.minsets().size() * b.minsets().size());
  for (MinSet ma : a.minsets()) {
    for (MinSet mb : b.minsets()) {
      unions.push_back(ma | mb);
    }
  }
  return canonicalize(std::move(unions));
}

UpSet unite(const UpSet& a, const UpSet& b) {
  std::vector<MinSet> all = a.minsets();
  all.insert(all.end(), b.minsets().begin(), b.minsets().end());
  return canonicalize(std::move(all));
}

UpSet restrict(const UpSet& a, std::size_t coord, bool value) {
  if (coord >= kMaxCoordinates) {
    throw std::out_of_range("coordinate index " + std::to_string(coord) + " exceeds the supported maximum of " +
                            std::to_string(kMaxCoordinates - 1));
  }
  const MinSet bit = MinSet{1} << coord;
  std::vector<MinSet> kept;
  kept.reserve(a.minsets().size());
  if (value) {
    for (MinSet m : a.minsets()) kept.push_back(m & ~bit);
    return canonicalize(std::move(kept));
  }
  // Dropping members of an antichain keeps it an antichain and keeps order.
  for (MinSet m : a.minsets()) {
    if ((m & bit) == 0) kept.push_back(m);
  }
  return UpSet(UpSet::canonical_tag{}, std::move(kept));
}

EventFamily::EventFamily(ProductSpace space, std::vector<UpSet> events)
    : EventFamily(std::move(space), std::move(events), {}) {}

EventFamily::EventFamily(ProductSpace space, std::vector<UpSet> events, std::vector<double> weights)
    : space_(std::move(space)), events_(std::move(events)), weights_(std::move(weights)) {
  if (weights_.empty()) weights_.assign(events_.size(), 1.0);
  validate();
  for (const UpSet& e : events_) joint_support_ |= e.support();
  for (double c : weights_) {
    if (c != 1.0) {
      unweighted_ = false;
      break;
    }
  }
}

void EventFamily::validate() const {
  if (weights_.size() != events_.size()) {
    throw std::invalid_argument("weight count " + std::to_string(weights_.size()) + " does not match event count " +
                                std::to_string(events_.size()));
  }
  const MinSet valid = space_.size() == kMaxCoordinates ? ~MinSet{0} : (MinSet{1} << space_.size()) - 1;
  for (std::size_t i = 0; i < events_.size(); ++i) {
    if ((events_[i].support() & ~valid) != 0) {
      throw std::out_of_range("event " + std::to_string(i) + " uses coordinates outside the space (n = " +
                              std::to_string(space_.size()) + ")");
    }
    if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i])) {
      throw std::invalid_argument("weight of event " + std::to_string(i) + " must be a positive finite real");
    }
  }
}

}  // namespace lowtail
