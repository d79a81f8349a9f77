#include "carpet/bundle_les.hpp"

#include <algorithm>
#include <functional>

namespace carpet {

DimResult::DimResult(CohomologyDims sub_dims, CohomologyDims quot_dims)
    : sub_(std::move(sub_dims)), quot_(std::move(quot_dims)) {
  rank0_max_ = std::min(quot_.h0, sub_.h1);
  rank1_max_ = std::min(quot_.h1, sub_.h2);
}

IntRange DimResult::h0() const {
  const Int top = sub_.h0 + quot_.h0;
  return {top - rank0_max_, top};
}

IntRange DimResult::h1() const {
  const Int top = sub_.h1 + quot_.h1;
  return {top - rank0_max_ - rank1_max_, top};
}

IntRange DimResult::h2() const {
  const Int top = sub_.h2 + quot_.h2;
  return {top - rank1_max_, top};
}

IntRange DimResult::h1_minus_h0() const {
  const Int top = (sub_.h1 + quot_.h1) - (sub_.h0 + quot_.h0);
  return {top - rank1_max_, top};
}

DimResult les_solve(const LesInstance& inst) {
  return DimResult(cohomology(inst.sub, inst.surface), cohomology(inst.quot, inst.surface));
}

LesInstance tangent_instance(const DivisorClass& twist, const HirzebruchSurface& s) {
  return {twist + DivisorClass{2, s.e()}, twist + DivisorClass{0, 2}, s};
}

DimResult tangent_cohomology(const DivisorClass& twist, const HirzebruchSurface& s) {
  return les_solve(tangent_instance(twist, s));
}

namespace {

struct NormalRuleContext {
  DivisorClass h;
  HirzebruchSurface surface;
  NormalTwist twist;
  Int k;
  Int ambient_dim;  // M = 1 + H.H, the span of the carpet
};

// One entry of the normal-bundle rule table. Rules are data: validity
// predicate, evaluation, and the anchor reported when the rule fires.
struct NormalTwistRule {
  std::string anchor;
  std::function<bool(const NormalRuleContext&)> applies;
  std::function<BoundValue(const NormalRuleContext&)> evaluate;
};

const std::vector<NormalTwistRule>& normal_twist_rules() {
  static const std::vector<NormalTwistRule> rules = {
      {"h0(N(-H)) = M+1 [a=2, b>=e+3]",
       [](const NormalRuleContext& c) {
         return c.twist == NormalTwist::MinusH && c.k == 1 && c.h.a == 2 &&
                c.h.b >= c.surface.e() + 3;
       },
       [](const NormalRuleContext& c) {
         return BoundValue{c.ambient_dim + 1, true};
       }},
      {"h0(N(-H)) <= M+2 [a=2, b=2, e=0]",
       [](const NormalRuleContext& c) {
         return c.twist == NormalTwist::MinusH && c.k == 1 && c.h.a == 2 && c.h.b == 2 &&
                c.surface.e() == 0;
       },
       [](const NormalRuleContext& c) {
         return BoundValue{c.ambient_dim + 2, false};
       }},
      {"h0(N(-kH+K)) <= h1(T(-kH+K)) [h1(-kH+K)=0 checked]",
       [](const NormalRuleContext& c) {
         if (c.twist != NormalTwist::MinusHPlusK) return false;
         const DivisorClass l = canonical_class(c.surface) - c.h * c.k;
         return cohomology(l, c.surface).h1 == 0;
       },
       [](const NormalRuleContext& c) {
         const DivisorClass l = canonical_class(c.surface) - c.h * c.k;
         const DimResult t = tangent_cohomology(l, c.surface);
         // The true h1 lies in the interval; its upper end is a sound bound.
         return BoundValue{t.h1().hi, false};
       }},
  };
  return rules;
}

}  // namespace

NormalBoundVerdict h0_normal_twist(const DivisorClass& h, const HirzebruchSurface& s,
                                   NormalTwist twist, const Int& k) {
  if (!is_very_ample(h, s))
    throw NotVeryAmple("h0_normal_twist: H = " + h.str() + " is not very ample on F_" +
                       std::to_string(s.e()));
  if (k < 1) throw InvalidQuery("h0_normal_twist: k must be >= 1");

  const NormalRuleContext ctx{h, s, twist, k, Int(1) + intersect(h, h, s)};
  for (const NormalTwistRule& rule : normal_twist_rules()) {
    if (rule.applies(ctx)) return {rule.evaluate(ctx), rule.anchor};
  }
  throw NoRuleApplies("no normal-bundle rule covers (a=" + h.a.str() + ", b=" + h.b.str() +
                      ", e=" + std::to_string(s.e()) + ", k=" + k.str() + ")");
}

std::vector<TangentVanishingCheck> tangent_vanishing_report(const HirzebruchSurface& s,
                                                            const Int& a, const Int& b) {
  const Int e = s.e();
  const DivisorClass h{a, b};
  const DivisorClass k = canonical_class(s);
  const bool very_ample_range = a >= 1 && b >= a * e + 1;

  const DimResult t_minus_h = tangent_cohomology(-h, s);
  const DimResult t_minus_h_plus_k = tangent_cohomology(k - h, s);

  std::vector<TangentVanishingCheck> rows;
  // Exactness is per component: one unresolved rank can leave h1 an interval
  // while h0 is already pinned.
  auto add = [&rows](std::string group, std::string anchor, bool cond, IntRange value) {
    const bool exact = value.exact();
    rows.push_back({std::move(group), std::move(anchor), cond, std::move(value), exact});
  };

  add("h1(T(-H))",
      "h1(T(-H))=0 [b>=ae+1; a=1,b<=1 | a=2,ae-e+3<=b<=e+1 | a=3,b>=2e+3 | "
      "a>=4,b>=max(ae-2e+3,ae-e+3)]",
      very_ample_range &&
          ((a == 1 && b <= 1) || (a == 2 && a * e - e + 3 <= b && b <= e + 1) ||
           (a == 3 && b >= 2 * e + 3) ||
           (a >= 4 && b >= std::max(Int(a * e - 2 * e + 3), Int(a * e - e + 3)))),
      t_minus_h.h1());
  add("h1(T(-H+K))", "h1(T(-H+K))=0 [b>=ae+1; a=1,b>=e+1 | a>=2]",
      very_ample_range && ((a == 1 && b >= e + 1) || a >= 2), t_minus_h_plus_k.h1());
  add("h0(T(-H))", "h0(T(-H))=0 [b>=ae+1; a=1,b>=e+1 | a=2,b>=e+1 | a>=3]",
      very_ample_range && ((a == 1 && b >= e + 1) || (a == 2 && b >= e + 1) || a >= 3),
      t_minus_h.h0());

  return rows;
}

}  // namespace carpet
