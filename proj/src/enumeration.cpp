#include "lowtail/enumeration.hpp"

#include <algorithm>
#include <stdexcept>

namespace lowtail {

SupportEnumeration::SupportEnumeration(MinSet support, const ProductSpace& space)
    : coords_(indices_from_mask(support)) {
  m_ = static_cast<int>(coords_.size());
  lo_bits_ = std::min(m_, 14);
  lo_mask_ = (std::uint64_t{1} << lo_bits_) - 1;

  w_lo_.assign(std::uint64_t{1} << lo_bits_, 1.0);
  for (std::uint64_t w = 0; w < w_lo_.size(); ++w) {
    double acc = 1.0;
    for (int b = 0; b < lo_bits_; ++b) {
      const double p = space.p(coords_[static_cast<std::size_t>(b)]);
      acc *= ((w >> b) & 1) ? p : 1.0 - p;
    }
    w_lo_[w] = acc;
  }
  w_hi_.assign(std::uint64_t{1} << (m_ - lo_bits_), 1.0);
  for (std::uint64_t w = 0; w < w_hi_.size(); ++w) {
    double acc = 1.0;
    for (int b = lo_bits_; b < m_; ++b) {
      const double p = space.p(coords_[static_cast<std::size_t>(b)]);
      acc *= ((w >> (b - lo_bits_)) & 1) ? p : 1.0 - p;
    }
    w_hi_[w] = acc;
  }
}

std::uint64_t SupportEnumeration::localize(MinSet global) const {
  std::uint64_t local = 0;
  for (MinSet rest = global; rest != 0; rest &= rest - 1) {
    const std::size_t coord = static_cast<std::size_t>(std::countr_zero(rest));
    const auto it = std::lower_bound(coords_.begin(), coords_.end(), coord);
    if (it == coords_.end() || *it != coord) {
      throw std::logic_error("coordinate outside the enumerated support");
    }
    local |= std::uint64_t{1} << static_cast<std::size_t>(it - coords_.begin());
  }
  return local;
}

std::vector<std::uint64_t> SupportEnumeration::localize(const UpSet& a) const {
  std::vector<std::uint64_t> out;
  out.reserve(a.minsets().size());
  for (MinSet m : a.minsets()) out.push_back(localize(m));
  return out;
}

}  // namespace lowtail
