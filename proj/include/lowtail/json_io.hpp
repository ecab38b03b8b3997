#pragma once

#include <string>

#include <json.hpp>

namespace lowtail {

using Json = nlohmann::ordered_json;

// Canonical serialization: insertion-ordered keys, two-space indentation,
// floating-point numbers rendered with up to 17 significant digits (exact
// round trip). Output bytes depend only on the document contents.
std::string emit_json(const Json& doc);

// %.17g with a guard against non-finite values.
std::string format_double(double x);

}  // namespace lowtail
