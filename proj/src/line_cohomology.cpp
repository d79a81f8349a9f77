#include "carpet/line_cohomology.hpp"

#include <cassert>

namespace carpet {

Int SplitBundle::h0() const {
  Int total = 0;
  for (const Int& d : degrees) total += max0(d + 1);
  return total;
}

Int SplitBundle::h1() const {
  Int total = 0;
  for (const Int& d : degrees) total += max0(-d - 1);
  return total;
}

Int SplitBundle::chi() const {
  Int total = 0;
  for (const Int& d : degrees) total += d + 1;
  return total;
}

std::string CohomologyDims::str() const {
  return "(" + h0.str() + ", " + h1.str() + ", " + h2.str() + ")";
}

SplitBundle pushforward(const DivisorClass& d, const HirzebruchSurface& s) {
  SplitBundle out;
  if (d.a < 0) return out;
  for (Int k = 0; k <= d.a; ++k) out.degrees.push_back(d.b - k * s.e());
  return out;
}

SplitBundle higher_pushforward(const DivisorClass& d, const HirzebruchSurface& s) {
  SplitBundle out;
  if (d.a >= -1) return out;
  for (Int k = 0; k <= -d.a - 2; ++k) out.degrees.push_back(d.b + s.e() * (k + 1));
  return out;
}

CohomologyDims cohomology(const DivisorClass& d, const HirzebruchSurface& s) {
  const SplitBundle lower = pushforward(d, s);
  const SplitBundle higher = higher_pushforward(d, s);
  return {lower.h0(), lower.h1() + higher.h0(), higher.h1()};
}

Int euler_char(const DivisorClass& d, const HirzebruchSurface& s) {
  const Int pairing = intersect(d, d - canonical_class(s), s);
  assert(pairing % 2 == 0);
  return 1 + pairing / 2;
}

std::vector<VanishingCheck> vanishing_report(const HirzebruchSurface& s, const Int& a,
                                             const Int& b) {
  const Int e = s.e();
  const HirzebruchSurface& fe = s;
  const DivisorClass h{a, b};
  const DivisorClass k = canonical_class(fe);
  const bool very_ample_range = b >= a * e + 1;

  std::vector<VanishingCheck> rows;
  auto add = [&rows](std::string group, std::string anchor, bool cond, Int value) {
    rows.push_back({std::move(group), std::move(anchor), cond, std::move(value)});
  };

  // Relative tangent twist 2C0 + ef - H.
  const DivisorClass rel_tangent = DivisorClass{2, e} - h;
  add("h1(2C0+ef-H)",
      "h1(2C0+ef-H)=0 [a=1,b<=1 | a=2,b<=e+1 | a=3 | a>=4,b>=ae-2e+1]",
      (a == 1 && b <= 1) || (a == 2 && b <= e + 1) || (a == 3) ||
          (a >= 4 && b >= a * e - 2 * e + 1),
      cohomology(rel_tangent, fe).h1);
  add("h0(2C0+ef-H)", "h0(2C0+ef-H)=0 [a=1,b>=e+1 | a=2,b>=e+1 | a>=4]",
      (a == 1 && b >= e + 1) || (a == 2 && b >= e + 1) || (a >= 4),
      cohomology(rel_tangent, fe).h0);

  // Pulled-back tangent twist 2f - H.
  const DivisorClass base_tangent = DivisorClass{0, 2} - h;
  add("h1(2f-H)", "h1(2f-H)=0 [a=1 | a>=2,b>=ae-e+3]",
      (a == 1) || (a >= 2 && b >= a * e - e + 3), cohomology(base_tangent, fe).h1);
  add("h0(2f-H)", "h0(2f-H)=0 [a>=1]", a >= 1, cohomology(base_tangent, fe).h0);

  // Adjoint-type twists; these rows assume b >= ae+1.
  add("h1(-H+K)", "h1(-H+K)=0 [a>=1,b>=ae+1]", very_ample_range,
      cohomology(k - h, fe).h1);
  add("h1(-H-K)",
      "h1(-H-K)=0 [b>=ae+1; a=1,b<=3 | a=2,b<=e+3 | a=3 | a>=4,b>=ae-2e+3]",
      very_ample_range && ((a == 1 && b <= 3) || (a == 2 && b <= e + 3) || (a == 3) ||
                           (a >= 4 && b >= a * e - 2 * e + 3)),
      cohomology(-h - k, fe).h1);
  add("h0(-H-2K)", "h0(-H-2K)=0 [b>=ae+1; a<=4,b>=2e+5 | a>=5]",
      very_ample_range && ((a <= 4 && b >= 2 * e + 5) || (a >= 5)),
      cohomology(-h - k * Int(2), fe).h0);

  return rows;
}

}  // namespace carpet
