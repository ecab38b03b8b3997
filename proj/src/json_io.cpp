#include "lowtail/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace lowtail {

std::string format_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("refusing to serialize a non-finite number");
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

void escape_string(const std::string& s, std::string& out) {
  out.push_back('"');
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  out.push_back('"');
}

bool all_scalars(const Json& arr) {
  for (const auto& v : arr) {
    if (v.is_object() || v.is_array()) return false;
  }
  return true;
}

void emit(const Json& j, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  const std::string pad_in(static_cast<std::size_t>(depth + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        escape_string(key, out);
        out += ": ";
        emit(value, out, depth + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      if (all_scalars(j)) {
        out += "[";
        bool first = true;
        for (const auto& v : j) {
          if (!first) out += ", ";
          first = false;
          emit(v, out, depth);
        }
        out += "]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        emit(v, out, depth + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::string:
      escape_string(j.get_ref<const std::string&>(), out);
      return;
    case Json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      return;
    case Json::value_t::number_integer:
      out += std::to_string(j.get<std::int64_t>());
      return;
    case Json::value_t::number_unsigned:
      out += std::to_string(j.get<std::uint64_t>());
      return;
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    case Json::value_t::null:
      out += "null";
      return;
    default:
      throw std::invalid_argument("unsupported JSON value type");
  }
}

}  // namespace

std::string emit_json(const Json& doc) {
  std::string out;
  emit(doc, out, 0);
  out.push_back('\n');
  return out;
}

}  // namespace lowtail
