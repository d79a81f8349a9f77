#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "carpet/integers.hpp"

namespace carpet {

// Values that fit in 64 bits are emitted as JSON numbers, anything larger
// as a decimal string.
nlohmann::json json_int(const Int& v);

// Exact values as numbers, unresolved ones as {"min": .., "max": ..}.
nlohmann::json json_range(const IntRange& r);

nlohmann::json cohomology_json(int e, const Int& a, const Int& b, const IntRange& h0,
                               const IntRange& h1, const IntRange& h2, bool exact,
                               const std::vector<std::string>& anchors);

// "7" when exact, "lo..hi" otherwise (commas would break CSV).
std::string csv_range(const IntRange& r);

// Quotes a field iff it needs it; inner quotes are doubled.
std::string csv_field(const std::string& text);

std::string join(const std::vector<std::string>& parts, const std::string& sep);

}  // namespace carpet
