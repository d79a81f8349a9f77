#include "carpet/output.hpp"

#include <cstdint>
#include <limits>

namespace carpet {

nlohmann::json json_int(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

nlohmann::json json_range(const IntRange& r) {
  if (r.exact()) return json_int(r.lo);
  return nlohmann::json{{"min", json_int(r.lo)}, {"max", json_int(r.hi)}};
}

nlohmann::json cohomology_json(int e, const Int& a, const Int& b, const IntRange& h0,
                               const IntRange& h1, const IntRange& h2, bool exact,
                               const std::vector<std::string>& anchors) {
  return nlohmann::json{
      {"surface", {{"e", e}}},
      {"divisor", {{"a", json_int(a)}, {"b", json_int(b)}}},
      {"h", nlohmann::json::array({json_range(h0), json_range(h1), json_range(h2)})},
      {"exact", exact},
      {"anchors", anchors},
  };
}

std::string csv_range(const IntRange& r) {
  if (r.exact()) return r.lo.str();
  return r.lo.str() + ".." + r.hi.str();
}

std::string csv_field(const std::string& text) {
  const bool needs_quotes = text.find_first_of(",\"\n") != std::string::npos;
  if (!needs_quotes) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace carpet
