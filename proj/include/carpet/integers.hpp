#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

namespace carpet {

// Divisor coefficients, dimension counts and tangent-space sizes are all
// arbitrary-precision: scans square intersection numbers, so machine words
// are not safe by construction.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

inline Int max0(const Int& x) { return x > 0 ? x : Int(0); }

// Inclusive integer interval [lo, hi]; a known value is lo == hi.
struct IntRange {
  Int lo;
  Int hi;

  IntRange() : lo(0), hi(0) {}
  IntRange(Int value) : lo(value), hi(std::move(value)) {}  // NOLINT: implicit by design
  IntRange(Int low, Int high) : lo(std::move(low)), hi(std::move(high)) {}

  bool exact() const { return lo == hi; }
  bool contains(const Int& v) const { return lo <= v && v <= hi; }
  bool is_zero() const { return lo == 0 && hi == 0; }

  IntRange operator+(const IntRange& o) const { return {lo + o.lo, hi + o.hi}; }
  IntRange operator-(const IntRange& o) const { return {lo - o.hi, hi - o.lo}; }
  IntRange operator+(const Int& v) const { return {lo + v, hi + v}; }
  IntRange operator-(const Int& v) const { return {lo - v, hi - v}; }
  bool operator==(const IntRange& o) const { return lo == o.lo && hi == o.hi; }
  bool operator!=(const IntRange& o) const { return !(*this == o); }
};

inline IntRange clamp_at_zero(const IntRange& r) { return {max0(r.lo), max0(r.hi)}; }

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const IntRange& r) {
  if (r.exact()) return r.lo.str();
  return "[" + r.lo.str() + "," + r.hi.str() + "]";
}

}  // namespace carpet
