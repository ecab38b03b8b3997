#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lowtail/model.hpp"

namespace lowtail {

enum class DependencyMode { support, exact, explicit_pairs };

struct DependencySpec {
  DependencyMode mode = DependencyMode::support;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // explicit_pairs only
};

// A parsed instance: the family plus the requested dependency construction.
struct Instance {
  EventFamily family;
  DependencySpec dependency;
};

// Instance file format (JSON):
//   {
//     "n": 6,
//     "p": [0.5, ...],                      // length n, values in [0, 1]
//     "events": [ {"minsets": [[0,1,3]], "weight": 1}, ... ],
//     "dependency": "support" | "exact" | [[0,1], [2,3], ...]
//   }
// Coordinates are 0-based; events are canonicalized on load; "weight"
// defaults to 1 and "dependency" to "support".
Instance parse_instance(std::string_view text);

// Canonical bytes: stable field order, 17-significant-digit numbers,
// canonical min-set order. parse over serialize is the identity.
std::string serialize_instance(const Instance& instance);

}  // namespace lowtail
