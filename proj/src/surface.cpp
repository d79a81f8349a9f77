#include "carpet/surface.hpp"

#include <stdexcept>

namespace carpet {

HirzebruchSurface::HirzebruchSurface(int e) : e_(e) {
  if (e < 0) throw std::invalid_argument("Hirzebruch invariant e must be >= 0");
}

std::string DivisorClass::str() const {
  std::string out = a.str() + "C0";
  if (b >= 0) out += "+";
  out += b.str() + "f";
  return out;
}

Int intersect(const DivisorClass& d1, const DivisorClass& d2, const HirzebruchSurface& s) {
  return d1.a * d2.a * Int(-s.e()) + d1.a * d2.b + d2.a * d1.b;
}

DivisorClass canonical_class(const HirzebruchSurface& s) {
  return {Int(-2), Int(-(s.e() + 2))};
}

bool is_very_ample(const DivisorClass& h, const HirzebruchSurface& s) {
  return h.a >= 1 && h.b >= h.a * s.e() + 1;
}

bool is_effective(const DivisorClass& d) { return d.a >= 0 && d.b >= 0; }

}  // namespace carpet
