#pragma once

#include <string>

#include "carpet/integers.hpp"

namespace carpet {

// The Hirzebruch surface F_e, ruled over P^1 with a section C0 of
// self-intersection -e and fiber class f.
class HirzebruchSurface {
 public:
  explicit HirzebruchSurface(int e);

  int e() const { return e_; }

 private:
  int e_;
};

// A lattice point aC0 + bf of Pic(F_e). The surface invariant travels
// separately so one class can be paired on several surfaces in a scan.
struct DivisorClass {
  Int a;  // coefficient of the section class C0
  Int b;  // coefficient of the fiber class f

  DivisorClass() : a(0), b(0) {}
  DivisorClass(Int ca, Int cb) : a(std::move(ca)), b(std::move(cb)) {}

  DivisorClass operator+(const DivisorClass& o) const { return {a + o.a, b + o.b}; }
  DivisorClass operator-(const DivisorClass& o) const { return {a - o.a, b - o.b}; }
  DivisorClass operator-() const { return {-a, -b}; }
  DivisorClass operator*(const Int& n) const { return {a * n, b * n}; }
  bool operator==(const DivisorClass& o) const { return a == o.a && b == o.b; }
  bool operator!=(const DivisorClass& o) const { return !(*this == o); }

  static DivisorClass zero() { return {0, 0}; }
  static DivisorClass section() { return {1, 0}; }
  static DivisorClass fiber() { return {0, 1}; }

  std::string str() const;  // "2C0+6f"
};

inline DivisorClass operator*(const Int& n, const DivisorClass& d) { return d * n; }

// Intersection pairing on F_e: C0.C0 = -e, C0.f = 1, f.f = 0.
Int intersect(const DivisorClass& d1, const DivisorClass& d2, const HirzebruchSurface& s);

// K = -2C0 - (e+2)f; K.K = 8 on every F_e.
DivisorClass canonical_class(const HirzebruchSurface& s);

// aC0 + bf is very ample iff a >= 1 and b >= ae + 1.
bool is_very_ample(const DivisorClass& h, const HirzebruchSurface& s);

// The effective cone is spanned by C0 and f.
bool is_effective(const DivisorClass& d);

}  // namespace carpet
