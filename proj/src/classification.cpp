#include "carpet/classification.hpp"

#include <stdexcept>

namespace carpet {

namespace {

const char* kIntegralityAnchor = "nonempty family forces d = 2(g-1)/r integral";
const char* kAlphaZeroAnchor =
    "alpha = 0 for the general K3 section => no extension exists";
const char* kAlphaCeilingAnchor =
    "alpha <= n-3 and h0(N(-2)) = 0 => K3 section not (n-2)-extendable";
const char* kAdjunctionAnchor =
    "adjunction theory excludes Mukai extensions for (r, g) = (2, 3) and (2, 4)";
const char* kIrreducibilityAnchor =
    "cone over the general K3 is a smooth point: tangent dimension matches the known "
    "family dimension, so the family is irreducible and the classical examples are dense";
const char* kConeDimAnchor =
    "dim T at cone = sum over k >= 0 of h0(N(-k)) = 18+(2+r^2(g-1))^2+alpha+(2+r^2(g-1))";
const char* kTripleConeAnchor =
    "dim T at triple cone = 18+(2+r^2(g-1))^2+3(alpha+2+r^2(g-1))";
const char* kUniqueFanoAnchor =
    "alpha = 1: the general K3 section lies in a unique Fano threefold";

Int square(const Int& v) { return v * v; }

}  // namespace

const std::vector<LowGenusAlpha>& low_genus_alpha_table() {
  static const std::vector<LowGenusAlpha> table = [] {
    struct Row {
      int r, g, a, b, e;
      bool exact;
    };
    // (3, 3) carries only the bound; every other row is an equality.
    const Row rows[] = {
        {2, 3, 2, 2, 0, true}, {2, 4, 2, 4, 1, true}, {2, 5, 2, 4, 0, true},
        {2, 6, 2, 6, 1, true}, {3, 3, 3, 3, 0, false}, {3, 4, 3, 6, 1, true},
        {4, 3, 4, 4, 0, true},
    };
    std::vector<LowGenusAlpha> out;
    for (const Row& row : rows) {
      const AlphaReport report = alpha_upper(row.a, row.b, row.e);
      if (report.params.r != row.r || report.params.g != row.g)
        throw std::logic_error("low-genus table: carpet tuple does not match (r, g)");
      if (!report.bound.value.exact())
        throw std::logic_error("low-genus table: estimator did not resolve exactly");
      out.push_back({Int(row.r), Int(row.g), BoundValue{report.bound.value.hi, row.exact},
                     Int(row.a), Int(row.b), row.e});
    }
    return out;
  }();
  return table;
}

Int cone_tangent_dim(const Int& r, const Int& g, const Int& alpha, int correction) {
  const Int m1 = 2 + r * r * (g - 1);  // = M + 1
  return 18 + square(m1) + alpha + m1 + correction;
}

Int mukai_triple_cone_dim(const Int& r, const Int& g, const Int& alpha) {
  const Int m1 = 2 + r * r * (g - 1);
  return 18 + square(m1) + 3 * (alpha + m1);
}

namespace {

const LowGenusAlpha* find_low_genus(const Int& r, const Int& g) {
  for (const LowGenusAlpha& row : low_genus_alpha_table())
    if (row.r == r && row.g == g) return &row;
  return nullptr;
}

}  // namespace

ClassificationRecord classify_fano(const FanoQuery& q) {
  if (q.r < 2 || q.g < 3)
    throw InvalidQuery("classify_fano requires r >= 2 and g >= 3");

  ClassificationRecord rec;
  if (in_nonprime_zero_alpha_range(q.r, q.g)) {
    rec.status = FamilyStatus::Empty;
    rec.reason = "the general K3 hyperplane section (index " + q.r.str() +
                 ", genus " + q.g.str() + ") is not extendable";
    rec.anchors = {kAlphaZeroAnchor};
    return rec;
  }
  if ((2 * (q.g - 1)) % q.r != 0) {
    rec.status = FamilyStatus::Empty;
    rec.reason = "degree 2(g-1)/r = " + Int(2 * (q.g - 1)).str() + "/" + q.r.str() +
                 " is not an integer";
    rec.anchors = {kIntegralityAnchor};
    return rec;
  }

  const LowGenusAlpha* row = find_low_genus(q.r, q.g);
  if (row == nullptr || !row->alpha.is_exact)
    throw std::logic_error("classify_fano: query not covered by any rule");

  rec.status = FamilyStatus::NonemptyIrreducible;
  rec.alpha = row->alpha;
  const int correction = (q.r == 2 && q.g == 3) ? 1 : 0;
  rec.tangent_dim_at_cone = cone_tangent_dim(q.r, q.g, row->alpha.value, correction);
  rec.unique_fano_through_general_k3 = (row->alpha.value == 1);
  rec.reason =
      "nonempty and irreducible; the classical families form a dense open subset and the "
      "general fiber of the flag projection is irreducible";
  rec.anchors = {kIrreducibilityAnchor, kConeDimAnchor};
  if (*rec.unique_fano_through_general_k3) rec.anchors.push_back(kUniqueFanoAnchor);
  return rec;
}

ClassificationRecord classify_mukai(const MukaiQuery& q) {
  if (q.n < 4 || q.r < 2 || q.g < 3)
    throw InvalidQuery("classify_mukai requires n >= 4, r >= 2 and g >= 3");

  ClassificationRecord rec;
  if (in_nonprime_zero_alpha_range(q.r, q.g)) {
    rec.status = FamilyStatus::Empty;
    rec.reason = "the general K3 surface section is not extendable";
    rec.anchors = {kAlphaZeroAnchor};
    return rec;
  }
  if ((2 * (q.g - 1)) % q.r != 0) {
    rec.status = FamilyStatus::Empty;
    rec.reason = "degree 2(g-1)/r is not an integer";
    rec.anchors = {kIntegralityAnchor};
    return rec;
  }
  if (q.r == 2 && (q.g == 3 || q.g == 4)) {
    rec.status = FamilyStatus::Empty;
    rec.reason = "excluded by adjunction theory";
    rec.anchors = {kAdjunctionAnchor};
    return rec;
  }

  const LowGenusAlpha* row = find_low_genus(q.r, q.g);
  if (row == nullptr) throw std::logic_error("classify_mukai: query not covered by any rule");
  rec.alpha = row->alpha;

  // A Mukai n-fold makes the K3 section (n-2)-extendable; alpha <= n-3
  // rules that out (h0(N(-2)) = 0 holds on every surviving pair).
  if (row->alpha.value <= q.n - 3) {
    rec.status = FamilyStatus::Empty;
    rec.reason = "alpha <= " + row->alpha.value.str() +
                 " so the K3 section is not " + Int(q.n - 2).str() + "-extendable";
    rec.anchors = {kAlphaCeilingAnchor};
    return rec;
  }

  // Only (r, g) = (2, 5) with n in {4, 5} survives.
  rec.status = FamilyStatus::NonemptyIrreducible;
  rec.reason = "nonempty and irreducible; the classical Mukai family is a dense open subset";
  rec.anchors = {kIrreducibilityAnchor};
  if (q.n == 5) {
    rec.tangent_dim_at_cone = mukai_triple_cone_dim(q.r, q.g, row->alpha.value);
    rec.anchors.push_back(kTripleConeAnchor);
  }
  return rec;
}

}  // namespace carpet
