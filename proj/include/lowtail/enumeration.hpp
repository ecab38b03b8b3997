#pragma once

#include <cstdint>
#include <vector>

#include "lowtail/model.hpp"

namespace lowtail {

// Exhaustive-enumeration scaffolding over a fixed set of coordinates.
// Local outcomes are bitmasks over positions 0..m-1; position b corresponds
// to global coordinate coords()[b]. Outcome weights come from precomputed
// half-split tables, so weight lookup is O(1).
class SupportEnumeration {
 public:
  SupportEnumeration(MinSet support, const ProductSpace& space);

  int m() const noexcept { return m_; }
  std::uint64_t count() const noexcept { return std::uint64_t{1} << m_; }
  const std::vector<std::size_t>& coords() const noexcept { return coords_; }

  double weight(std::uint64_t omega) const {
    return w_lo_[omega & lo_mask_] * w_hi_[omega >> lo_bits_];
  }

  // Translates a global mask (subset of the support) into local positions.
  std::uint64_t localize(MinSet global) const;
  std::vector<std::uint64_t> localize(const UpSet& a) const;

  static bool holds(const std::vector<std::uint64_t>& local_minsets, std::uint64_t omega) {
    for (std::uint64_t m : local_minsets) {
      if ((m & omega) == m) return true;
    }
    return false;
  }

 private:
  std::vector<std::size_t> coords_;
  std::vector<double> w_lo_;
  std::vector<double> w_hi_;
  int m_ = 0;
  int lo_bits_ = 0;
  std::uint64_t lo_mask_ = 0;
};

}  // namespace lowtail
