#include "carpet/extendability.hpp"

#include <cassert>

namespace carpet {

namespace {

const char* kBetaFormula =
    "beta = h1(T(-H+K)) + h1(T(-H)) - h0(T(-H)) + h1(-H-K) + h0(-H-2K); alpha(carpet) <= beta";
const char* kGammaFormula =
    "gamma = h1(T(-H+K)) + h0(N(-H)) + h0(-H-2K) - M - 1; alpha(carpet) <= gamma";
const char* kFiveTermFormula =
    "h0(N(-kH)) <= h1(T(-kH+K)) + h1(T(-kH)) - h0(T(-kH)) + h1(-kH-K) + h0(-kH-2K)";

}  // namespace

std::string beta_anchor() { return kBetaFormula; }
std::string gamma_anchor() { return kGammaFormula; }
std::string five_term_anchor() { return kFiveTermFormula; }

CarpetParams carpet_params(const Int& a, const Int& b, int e) {
  const HirzebruchSurface s(e);
  const DivisorClass h{a, b};
  if (!is_very_ample(h, s))
    throw NotVeryAmple("carpet requires very ample H: need a >= 1 and b >= ae+1, got a=" +
                       a.str() + ", b=" + b.str() + ", e=" + std::to_string(e));

  CarpetParams p;
  p.a = a;
  p.b = b;
  p.e = e;
  p.r = gcd(a, b);
  p.Hsq = intersect(h, h, s);
  assert(p.Hsq % (p.r * p.r) == 0);
  p.g = 1 + p.Hsq / (p.r * p.r);
  p.N = cohomology(h, s).h0 - 1;
  p.M = 1 + p.Hsq;
  p.prime = (p.r == 1);
  p.primality_certified = (e <= 2);
  return p;
}

AlphaBound beta_bound(const Int& a, const Int& b, int e) {
  carpet_params(a, b, e);  // validates very ampleness
  const HirzebruchSurface s(e);
  const DivisorClass h{a, b};
  const DivisorClass k = canonical_class(s);

  if (cohomology(k - h, s).h1 != 0)
    throw PreconditionFailed("beta requires h1(-H+K) = 0");

  const DimResult adjoint = tangent_cohomology(k - h, s);
  const DimResult plain = tangent_cohomology(-h, s);
  const IntRange value = adjoint.h1() + plain.h1_minus_h0() +
                         IntRange(cohomology(-h - k, s).h1) +
                         IntRange(cohomology(-h - k * Int(2), s).h0);

  AlphaBound out;
  out.value = clamp_at_zero(value);
  out.estimator = AlphaBound::Estimator::Beta;
  out.anchors = {kBetaFormula};
  return out;
}

AlphaBound gamma_bound(const Int& b, int e) {
  const CarpetParams p = carpet_params(2, b, e);
  const HirzebruchSurface s(e);
  const DivisorClass h{2, b};
  const DivisorClass k = canonical_class(s);

  const IntRange adjoint_h1 = tangent_cohomology(k - h, s).h1();
  const Int h0_anti = cohomology(-h - k * Int(2), s).h0;
  const NormalBoundVerdict normal = h0_normal_twist(h, s, NormalTwist::MinusH, 1);

  AlphaBound out;
  out.estimator = AlphaBound::Estimator::Gamma;
  out.anchors = {kGammaFormula, normal.anchor};
  out.value = clamp_at_zero(adjoint_h1 + IntRange(normal.h0.value + h0_anti - p.M - 1));
  if (!normal.h0.is_exact) out.special_correction = 1;
  return out;
}

AlphaReport alpha_upper(const Int& a, const Int& b, int e) {
  if (a == 1)
    throw UnsupportedA("a = 1 (scroll carpets) has no estimator rules; rejected");
  if (a < 1) throw NotVeryAmple("a must be >= 1");
  AlphaReport report{carpet_params(a, b, e), a == 2 ? gamma_bound(b, e) : beta_bound(a, b, e)};
  return report;
}

IntRange h0_normal_minus_k(const Int& a, const Int& b, int e, const Int& k) {
  if (k < 2) throw InvalidQuery("h0_normal_minus_k: k must be >= 2");
  carpet_params(a, b, e);
  const HirzebruchSurface s(e);
  const DivisorClass kh = DivisorClass{a, b} * k;
  const DivisorClass can = canonical_class(s);

  const DimResult adjoint = tangent_cohomology(can - kh, s);
  const DimResult plain = tangent_cohomology(-kh, s);
  const IntRange value = adjoint.h1() + plain.h1_minus_h0() +
                         IntRange(cohomology(-kh - can, s).h1) +
                         IntRange(cohomology(-kh - can * Int(2), s).h0);
  return clamp_at_zero(value);
}

ExtendabilityVerdict zak_lvovsky(const AlphaBound& bound, const IntRange& h0_minus2,
                                 const Int& m) {
  ExtendabilityVerdict v;
  v.h0_normal_minus2 = h0_minus2;
  const Int alpha_cap = bound.value.hi;

  if (alpha_cap == 0) {
    v.extendable = ExtendabilityVerdict::Extendable::No;
    v.k_extendability_ceiling = 1;
    v.reasons.push_back("alpha <= 0 => not extendable");
    return v;
  }

  v.extendable = ExtendabilityVerdict::Extendable::Unknown;
  if (alpha_cap < m || h0_minus2.is_zero()) {
    v.k_extendability_ceiling = alpha_cap + 1;
    v.reasons.push_back("alpha <= k-1 with alpha < M or h0(N(-2)) = 0 => not k-extendable [k=" +
                        Int(alpha_cap + 1).str() + "]");
  } else {
    v.reasons.push_back(
        "k-extendability inconclusive: alpha >= M and h0(N(-2)) not known to vanish");
  }
  return v;
}

bool in_nonprime_zero_alpha_range(const Int& r, const Int& g) {
  return (r >= 5 && g >= 3) || (r == 4 && g >= 4) || (r == 3 && g >= 5) ||
         (r == 2 && g >= 7);
}

bool in_prime_zero_alpha_family(const Int& g) {
  if (g >= 21 && (g - 1) % 4 == 0) return true;  // 4k+1, k >= 5
  struct Family {
    int offset;
    int k_min;
  };
  static const Family families[] = {{4, 1}, {7, 2}, {13, 1}, {16, 1}};
  for (const Family& f : families) {
    const Int shifted = g - f.offset;
    if (shifted >= 18 * Int(f.k_min) && shifted % 18 == 0) return true;
  }
  return false;
}

CarpetAnalysis analyze_carpet(const Int& a, const Int& b, int e) {
  const AlphaReport report = alpha_upper(a, b, e);
  CarpetAnalysis out{report.params, report.bound, {}};
  const IntRange n2 = h0_normal_minus_k(a, b, e, 2);
  out.verdict = zak_lvovsky(out.bound, n2, out.params.M);

  if (out.verdict.extendable == ExtendabilityVerdict::Extendable::No) {
    if (out.params.prime && !in_prime_zero_alpha_family(out.params.g)) {
      // alpha <= 0 holds for the carpet; the named-family claim stays inside
      // the certified genera.
      out.verdict.extendable = ExtendabilityVerdict::Extendable::Unknown;
      out.verdict.reasons.push_back(
          "alpha <= 0 for the carpet, but genus " + out.params.g.str() +
          " lies outside the certified prime families; verdict withheld");
    } else {
      out.verdict.reasons.push_back(
          "verdict applies to the general member of the Hilbert component containing the "
          "carpet");
      if (out.params.prime) {
        out.verdict.reasons.push_back(
            "prime family: g in {4k+1 (k>=5), 18k+4 (k>=1), 18k+7 (k>=2), 18k+13 (k>=1), "
            "18k+16 (k>=1)}");
      } else if (in_nonprime_zero_alpha_range(out.params.r, out.params.g)) {
        out.verdict.reasons.push_back(
            "non-prime range: r>=5,g>=3 | r=4,g>=4 | r=3,g>=5 | r=2,g>=7");
      }
      if (!out.params.primality_certified) {
        out.verdict.reasons.push_back("(r,g) identification of the smoothing certified only "
                                      "for e <= 2; carpet has e = " +
                                      std::to_string(out.params.e));
      }
    }
  }
  return out;
}

DoubleCoverReport double_cover_alpha(const Int& b, int e) {
  if (e != 0 && e != 1) throw InvalidQuery("double covers handled for e in {0, 1} only");
  DoubleCoverReport report{carpet_params(3, b, e), beta_bound(3, b, e), b >= 2 * e + 2};
  report.bound.anchors.push_back(
      "double cover degenerates isotrivially to the split carpet [a>=2, b>=(a-1)e+2]");
  return report;
}

}  // namespace carpet
