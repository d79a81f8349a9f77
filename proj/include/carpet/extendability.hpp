#pragma once

#include <optional>
#include <string>
#include <vector>

#include "carpet/bundle_les.hpp"

namespace carpet {

// Input data of a K3 carpet on F_e embedded by H = aC0 + bf, together with
// the invariants of the K3 surfaces it smooths to.
struct CarpetParams {
  Int a;
  Int b;
  int e;
  Int r;    // gcd(a, b): multiplicity of the hyperplane class after smoothing
  Int g;    // genus: 1 + (2ab - a^2 e) / r^2, always integral
  Int Hsq;  // H.H = 2ab - a^2 e
  Int N;    // dim of the span of Y: h0(H) - 1
  Int M;    // dim of the span of the carpet: 1 + Hsq = N + h0(H+K)
  bool prime;                // r == 1
  bool primality_certified;  // the prime/non-prime identification holds for e <= 2
};

CarpetParams carpet_params(const Int& a, const Int& b, int e);

// A certified upper bound for alpha = h0(N(-1)) - M - 1 of the carpet.
// Interval-valued only when a connecting-map rank is unresolved; the upper
// end is always a sound bound.
struct AlphaBound {
  enum class Estimator { Beta, Gamma };

  IntRange value;
  Estimator estimator;
  int special_correction = 0;  // 1 only at (a, b, e) = (2, 2, 0)
  std::vector<std::string> anchors;
};

// beta = h1(T(-H+K)) + h1(T(-H)) - h0(T(-H)) + h1(-H-K) + h0(-H-2K).
// Requires h1(-H+K) = 0 (checked; automatic for very ample H).
AlphaBound beta_bound(const Int& a, const Int& b, int e);

// a = 2 only: gamma = h1(T(-H+K)) + h0(N(-H)) + h0(-H-2K) - M - 1, with
// h0(N(-H)) supplied by the normal-bundle rule table. Throws NoRuleApplies
// for 2e+1 <= b < e+3 except at (e, b) = (0, 2), where the bound picks up
// the one-dimensional obstruction correction (+1).
AlphaBound gamma_bound(const Int& b, int e);

struct AlphaReport {
  CarpetParams params;
  AlphaBound bound;
};

// Dispatches to gamma_bound for a = 2 and beta_bound for a >= 3.
// a = 1 (scroll carpets) is rejected: no estimator rules exist for it.
AlphaReport alpha_upper(const Int& a, const Int& b, int e);

// Five-term upper bound for h0(N_carpet(-kH)), k >= 2:
//   h1(T(-kH+K)) + h1(T(-kH)) - h0(T(-kH)) + h1(-kH-K) + h0(-kH-2K).
IntRange h0_normal_minus_k(const Int& a, const Int& b, int e, const Int& k);

struct ExtendabilityVerdict {
  enum class Extendable { No, Unknown };

  Extendable extendable;
  std::optional<Int> k_extendability_ceiling;  // smallest k with "not k-extendable"
  IntRange h0_normal_minus2;
  std::vector<std::string> reasons;
};

// The Zak-L'vovsky gate: alpha <= 0 forbids extension outright; for k >= 2,
// alpha <= k-1 forbids k-extension provided alpha < M or h0(N(-2)) = 0.
ExtendabilityVerdict zak_lvovsky(const AlphaBound& bound, const IntRange& h0_minus2,
                                 const Int& m);

// alpha = 0 ranges for non-prime K3 surfaces of index r and genus g.
bool in_nonprime_zero_alpha_range(const Int& r, const Int& g);

// The certified prime-genus families: g = 4k+1 (k >= 5), 18k+4 (k >= 1),
// 18k+7 (k >= 2), 18k+13 (k >= 1), 18k+16 (k >= 1).
bool in_prime_zero_alpha_family(const Int& g);

// Full pipeline for one carpet: parameters, estimator bound, the N(-2H)
// bound, and the verdict. For prime carpets the non-extendability claim is
// emitted only when the genus lies in a certified family.
struct CarpetAnalysis {
  CarpetParams params;
  AlphaBound bound;
  ExtendabilityVerdict verdict;
};

CarpetAnalysis analyze_carpet(const Int& a, const Int& b, int e);

// a = 3 embeddings of K3 double covers of F_0 / F_1: the double cover
// degenerates isotrivially to the split carpet, so beta(3, b, e) bounds its
// alpha whenever the split carpet embedding is projectively normal
// (b >= 2e+2).
struct DoubleCoverReport {
  CarpetParams params;
  AlphaBound bound;
  bool split_degeneration_applies;
};

DoubleCoverReport double_cover_alpha(const Int& b, int e);

// Formula anchors, for report and CLI output.
std::string beta_anchor();
std::string gamma_anchor();
std::string five_term_anchor();

}  // namespace carpet
