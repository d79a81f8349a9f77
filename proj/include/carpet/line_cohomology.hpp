#pragma once

#include <string>
#include <vector>

#include "carpet/surface.hpp"

namespace carpet {

// A direct sum of line bundles on P^1, as the multiset of their degrees.
// The empty sum is the zero sheaf (h0 = h1 = 0).
struct SplitBundle {
  std::vector<Int> degrees;

  Int h0() const;   // sum of max(0, d+1)
  Int h1() const;   // sum of max(0, -d-1)
  Int chi() const;  // sum of (d+1) = h0 - h1
  bool is_zero() const { return degrees.empty(); }
};

struct CohomologyDims {
  Int h0;
  Int h1;
  Int h2;

  Int chi() const { return h0 - h1 + h2; }
  bool operator==(const CohomologyDims& o) const {
    return h0 == o.h0 && h1 == o.h1 && h2 == o.h2;
  }
  bool operator!=(const CohomologyDims& o) const { return !(*this == o); }
  std::string str() const;
};

// p_*(aC0 + bf) along the ruling p: F_e -> P^1. Degrees {b - ke : 0 <= k <= a}
// for a >= 0, zero sheaf otherwise.
SplitBundle pushforward(const DivisorClass& d, const HirzebruchSurface& s);

// R^1p_*(aC0 + bf) via relative duality: degrees {b + e(k+1) : 0 <= k <= -a-2}
// for a <= -2, zero sheaf otherwise.
SplitBundle higher_pushforward(const DivisorClass& d, const HirzebruchSurface& s);

// Exact h^i of a line bundle on F_e. Leray over a curve base degenerates, so
// the two pushforward rows determine everything:
//   h0 = h0(p_*),  h1 = h1(p_*) + h0(R^1p_*),  h2 = h1(R^1p_*).
CohomologyDims cohomology(const DivisorClass& d, const HirzebruchSurface& s);

// Riemann-Roch on F_e: chi = 1 + D.(D-K)/2.
Int euler_char(const DivisorClass& d, const HirzebruchSurface& s);

// One row of the line-bundle vanishing tables: a sufficient condition on
// (a, b, e) next to the actual dimension of the group it forces to zero.
struct VanishingCheck {
  std::string group;   // e.g. "h1(2C0+ef-H)"
  std::string anchor;  // the rule, as a formula string
  bool condition_holds;
  Int value;

  bool sound() const { return !condition_holds || value == 0; }
};

// Evaluates every line-bundle vanishing rule at H = aC0 + bf on F_e.
// The -H+K / -H-K / -H-2K rows carry the standing hypothesis b >= ae+1
// inside their conditions, so the report is meaningful for any a >= 1.
std::vector<VanishingCheck> vanishing_report(const HirzebruchSurface& s, const Int& a,
                                             const Int& b);

}  // namespace carpet
