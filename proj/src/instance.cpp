#include "lowtail/instance.hpp"

#include <algorithm>
#include <cmath>

#include "lowtail/errors.hpp"
#include "lowtail/json_io.hpp"

namespace lowtail {

namespace {

ParseError field_error(const std::string& path, const std::string& what) {
  return ParseError("field '" + path + "': " + what);
}

double number_at(const Json& j, const std::string& path) {
  if (!j.is_number()) throw field_error(path, "expected a number");
  return j.get<double>();
}

std::size_t index_at(const Json& j, const std::string& path, std::size_t limit, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw field_error(path, std::string("expected a nonnegative integer ") + what);
  }
  const std::uint64_t v = j.get<std::uint64_t>();
  if (v >= limit) {
    throw field_error(path, std::string(what) + " " + std::to_string(v) + " out of range (limit " +
                                std::to_string(limit) + ")");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

Instance parse_instance(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top level must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "n" && key != "p" && key != "events" && key != "dependency") {
      throw ParseError("unknown field '" + key + "'");
    }
  }

  if (!j.contains("n")) throw ParseError("missing field 'n'");
  if (!j["n"].is_number_unsigned() && !(j["n"].is_number_integer() && j["n"].get<std::int64_t>() >= 0)) {
    throw field_error("n", "expected a nonnegative integer");
  }
  const std::uint64_t n64 = j["n"].get<std::uint64_t>();
  if (n64 > kMaxCoordinates) {
    throw field_error("n", std::to_string(n64) + " exceeds the supported maximum of " +
                               std::to_string(kMaxCoordinates) + " coordinates");
  }
  const std::size_t n = static_cast<std::size_t>(n64);

  if (!j.contains("p") || !j["p"].is_array()) throw ParseError("missing or non-array field 'p'");
  if (j["p"].size() != n) {
    throw field_error("p", "length " + std::to_string(j["p"].size()) + " does not match n = " + std::to_string(n));
  }
  std::vector<double> p;
  p.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string path = "p[" + std::to_string(i) + "]";
    const double v = number_at(j["p"][i], path);
    if (!(v >= 0.0 && v <= 1.0)) throw field_error(path, "probability " + format_double(v) + " outside [0, 1]");
    p.push_back(v);
  }

  if (!j.contains("events") || !j["events"].is_array()) throw ParseError("missing or non-array field 'events'");
  std::vector<UpSet> events;
  std::vector<double> weights;
  for (std::size_t e = 0; e < j["events"].size(); ++e) {
    const std::string epath = "events[" + std::to_string(e) + "]";
    const Json& je = j["events"][e];
    if (!je.is_object()) throw field_error(epath, "expected an object");
    if (!je.contains("minsets") || !je["minsets"].is_array()) {
      throw field_error(epath + ".minsets", "expected an array of coordinate arrays");
    }
    std::vector<MinSet> minsets;
    for (std::size_t m = 0; m < je["minsets"].size(); ++m) {
      const std::string mpath = epath + ".minsets[" + std::to_string(m) + "]";
      const Json& jm = je["minsets"][m];
      if (!jm.is_array()) throw field_error(mpath, "expected an array of coordinate indices");
      MinSet mask = 0;
      for (std::size_t c = 0; c < jm.size(); ++c) {
        const std::size_t coord = index_at(jm[c], mpath + "[" + std::to_string(c) + "]", n, "coordinate");
        mask |= MinSet{1} << coord;
      }
      minsets.push_back(mask);
    }
    events.push_back(canonicalize(std::move(minsets)));

    double weight = 1.0;
    if (je.contains("weight")) {
      weight = number_at(je["weight"], epath + ".weight");
      if (!(weight > 0.0) || !std::isfinite(weight)) {
        throw field_error(epath + ".weight", "weight " + std::to_string(weight) + " must be a positive finite real");
      }
    }
    weights.push_back(weight);
    for (const auto& [key, value] : je.items()) {
      if (key != "minsets" && key != "weight") throw field_error(epath, "unknown field '" + key + "'");
    }
  }

  DependencySpec dep;
  if (j.contains("dependency")) {
    const Json& jd = j["dependency"];
    if (jd.is_string()) {
      const std::string mode = jd.get<std::string>();
      if (mode == "support") {
        dep.mode = DependencyMode::support;
      } else if (mode == "exact") {
        dep.mode = DependencyMode::exact;
      } else {
        throw field_error("dependency", "expected \"support\", \"exact\", or an array of index pairs");
      }
    } else if (jd.is_array()) {
      dep.mode = DependencyMode::explicit_pairs;
      for (std::size_t i = 0; i < jd.size(); ++i) {
        const std::string path = "dependency[" + std::to_string(i) + "]";
        if (!jd[i].is_array() || jd[i].size() != 2) throw field_error(path, "expected a pair [i, j]");
        const std::size_t a = index_at(jd[i][0], path + "[0]", events.size(), "event index");
        const std::size_t b = index_at(jd[i][1], path + "[1]", events.size(), "event index");
        if (a == b) throw field_error(path, "pairs must join distinct events");
        dep.pairs.emplace_back(std::min(a, b), std::max(a, b));
      }
      std::sort(dep.pairs.begin(), dep.pairs.end());
      dep.pairs.erase(std::unique(dep.pairs.begin(), dep.pairs.end()), dep.pairs.end());
    } else {
      throw field_error("dependency", "expected \"support\", \"exact\", or an array of index pairs");
    }
  }

  return Instance{EventFamily(ProductSpace(std::move(p)), std::move(events), std::move(weights)), std::move(dep)};
}

std::string serialize_instance(const Instance& instance) {
  const EventFamily& family = instance.family;
  Json j;
  j["n"] = family.space().size();
  Json p = Json::array();
  for (double v : family.space().probs()) p.push_back(v);
  j["p"] = std::move(p);

  Json events = Json::array();
  for (std::size_t i = 0; i < family.size(); ++i) {
    Json je;
    Json minsets = Json::array();
    for (MinSet m : family.event(i).minsets()) {
      Json coords = Json::array();
      for (std::size_t c : indices_from_mask(m)) coords.push_back(c);
      minsets.push_back(std::move(coords));
    }
    je["minsets"] = std::move(minsets);
    je["weight"] = family.weight(i);
    events.push_back(std::move(je));
  }
  j["events"] = std::move(events);

  switch (instance.dependency.mode) {
    case DependencyMode::support:
      j["dependency"] = "support";
      break;
    case DependencyMode::exact:
      j["dependency"] = "exact";
      break;
    case DependencyMode::explicit_pairs: {
      Json pairs = Json::array();
      for (const auto& [a, b] : instance.dependency.pairs) {
        pairs.push_back(Json::array({a, b}));
      }
      j["dependency"] = std::move(pairs);
      break;
    }
  }
  return emit_json(j);
}

}  // namespace lowtail
