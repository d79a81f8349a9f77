#pragma once

#include <string>
#include <vector>

#include "carpet/errors.hpp"
#include "carpet/line_cohomology.hpp"

namespace carpet {

// A two-term filtration 0 -> sub -> E -> quot -> 0 whose graded pieces are
// line bundles; E is determined up to the two connecting maps of the long
// exact cohomology sequence.
struct LesInstance {
  DivisorClass sub;
  DivisorClass quot;
  HirzebruchSurface surface;
};

// Dimensions of H^i(E) as forced by the long exact sequence alone.
// The connecting-map ranks are free parameters r0 in [0, rank0_max] and
// r1 in [0, rank1_max]:
//   h0 = s0 + q0 - r0,  h1 = s1 + q1 - r0 - r1,  h2 = s2 + q2 - r1.
// They are never guessed; exact() means both are forced to zero.
class DimResult {
 public:
  DimResult(CohomologyDims sub_dims, CohomologyDims quot_dims);

  IntRange h0() const;
  IntRange h1() const;
  IntRange h2() const;
  // r0 cancels in h1 - h0, so this is tighter than interval arithmetic on
  // h1() and h0(); the estimators need the combination, not the parts.
  IntRange h1_minus_h0() const;

  IntRange rank0_range() const { return {Int(0), rank0_max_}; }
  IntRange rank1_range() const { return {Int(0), rank1_max_}; }
  bool exact() const { return rank0_max_ == 0 && rank1_max_ == 0; }
  Int chi() const { return sub_.chi() + quot_.chi(); }

  const CohomologyDims& sub_dims() const { return sub_; }
  const CohomologyDims& quot_dims() const { return quot_; }

 private:
  CohomologyDims sub_;
  CohomologyDims quot_;
  Int rank0_max_;  // min(q0, s1)
  Int rank1_max_;  // min(q1, s2)
};

DimResult les_solve(const LesInstance& inst);

// The tangent bundle of F_e filters as 0 -> 2C0+ef -> T -> 2f -> 0 along the
// ruling; twisting by L gives the instance solved here.
LesInstance tangent_instance(const DivisorClass& twist, const HirzebruchSurface& s);
DimResult tangent_cohomology(const DivisorClass& twist, const HirzebruchSurface& s);

enum class NormalTwist { MinusH, MinusHPlusK };

// An exact dimension, or a certified upper bound when is_exact is false.
struct BoundValue {
  Int value;
  bool is_exact;

  bool operator==(const BoundValue& o) const {
    return value == o.value && is_exact == o.is_exact;
  }
};

struct NormalBoundVerdict {
  BoundValue h0;
  std::string anchor;  // the rule that fired
};

// h^0 of the twisted normal bundle N_{Y/P^M}(-kH) or N_{Y/P^M}(-kH+K) for
// Y = F_e embedded by very ample H, via the rule table. Each rule carries
// its own validity predicate; outside all of them this throws NoRuleApplies
// (the caller falls back to the five-term estimator bound).
NormalBoundVerdict h0_normal_twist(const DivisorClass& h, const HirzebruchSurface& s,
                                   NormalTwist twist, const Int& k);

// Tangent-sheaf vanishing rows, same shape as line_cohomology's report.
// A satisfied condition is sound only if the value is an exact zero.
struct TangentVanishingCheck {
  std::string group;
  std::string anchor;
  bool condition_holds;
  IntRange value;
  bool exact;

  bool sound() const { return !condition_holds || (exact && value.is_zero()); }
};

std::vector<TangentVanishingCheck> tangent_vanishing_report(const HirzebruchSurface& s,
                                                            const Int& a, const Int& b);

}  // namespace carpet
