#include <doctest.h>

#include "carpet/extendability.hpp"

using namespace carpet;

TEST_CASE("carpet parameters") {
  const CarpetParams wide = carpet_params(2, 6, 0);
  CHECK(wide.r == 2);
  CHECK(wide.g == 7);
  CHECK(wide.Hsq == 24);
  CHECK(wide.M == 25);
  CHECK(wide.N == 20);
  CHECK_FALSE(wide.prime);
  CHECK(wide.primality_certified);

  const CarpetParams cubic = carpet_params(3, 3, 0);
  CHECK(cubic.r == 3);
  CHECK(cubic.g == 3);
  CHECK(cubic.M == 19);

  const CarpetParams scroll = carpet_params(1, 3, 1);
  CHECK(scroll.r == 1);
  CHECK(scroll.g == 6);
  CHECK(scroll.prime);

  CHECK_FALSE(carpet_params(2, 7, 3).primality_certified);
  CHECK_THROWS_AS(carpet_params(2, 2, 1), NotVeryAmple);
  CHECK_THROWS_AS(carpet_params(0, 5, 0), NotVeryAmple);
}

TEST_CASE("beta estimator") {
  CHECK(beta_bound(3, 5, 0).value == IntRange(0));
  CHECK(beta_bound(3, 3, 0).value == IntRange(4));
  CHECK(beta_bound(4, 4, 0).value == IntRange(1));
  CHECK(beta_bound(3, 6, 1).value == IntRange(1));
  // H = -2K on F_1: the h0(-H-2K) term is h0(O) = 1, so beta cannot vanish
  // at this corner even though every other term does.
  CHECK(beta_bound(4, 6, 1).value == IntRange(1));
  CHECK(beta_bound(4, 7, 1).value == IntRange(0));
  CHECK(beta_bound(5, 7, 1).value == IntRange(0));
}

TEST_CASE("gamma estimator") {
  const AlphaBound far = gamma_bound(6, 0);
  CHECK(far.value == IntRange(0));
  CHECK(far.special_correction == 0);

  const AlphaBound quartic = gamma_bound(2, 0);
  CHECK(quartic.value == IntRange(10));
  CHECK(quartic.special_correction == 1);

  CHECK(gamma_bound(4, 1).value == IntRange(6));

  CHECK_THROWS_AS(gamma_bound(1, 0), NoRuleApplies);
  CHECK_THROWS_AS(gamma_bound(3, 1), NoRuleApplies);
  CHECK_THROWS_AS(gamma_bound(2, 1), NotVeryAmple);
}

TEST_CASE("alpha_upper dispatch") {
  const AlphaReport wide = alpha_upper(2, 6, 0);
  CHECK(wide.bound.value == IntRange(0));
  CHECK(wide.params.g == 7);

  const AlphaReport index3 = alpha_upper(3, 6, 1);
  CHECK(index3.bound.value == IntRange(1));
  CHECK(index3.params.r == 3);
  CHECK(index3.params.g == 4);

  // gcd(2, 3) = 1: genus 13 carpet, prime, raw gamma value 6.
  const AlphaReport prime = alpha_upper(2, 3, 0);
  CHECK(prime.params.r == 1);
  CHECK(prime.params.g == 13);
  CHECK(prime.bound.value == IntRange(6));

  CHECK_THROWS_AS(alpha_upper(1, 5, 0), UnsupportedA);
}

TEST_CASE("k-twist normal bounds") {
  CHECK(h0_normal_minus_k(2, 3, 0, 2) == IntRange(0));
  CHECK(h0_normal_minus_k(2, 2, 0, 2) == IntRange(1));
  CHECK(h0_normal_minus_k(2, 2, 0, 3) == IntRange(0));
  // The anticanonical embedding of F_1 (2H = -2K) behaves like (2,2,0).
  CHECK(h0_normal_minus_k(2, 3, 1, 2) == IntRange(1));
  CHECK(h0_normal_minus_k(2, 3, 1, 3) == IntRange(0));
  CHECK(h0_normal_minus_k(2, 4, 1, 2) == IntRange(0));
  CHECK_THROWS_AS(h0_normal_minus_k(2, 3, 0, 1), InvalidQuery);
}

TEST_CASE("Zak-L'vovsky gate") {
  AlphaBound zero{IntRange(0), AlphaBound::Estimator::Beta, 0, {}};
  const ExtendabilityVerdict flat = zak_lvovsky(zero, IntRange(0), 17);
  CHECK(flat.extendable == ExtendabilityVerdict::Extendable::No);
  CHECK(flat.k_extendability_ceiling == Int(1));

  AlphaBound three{IntRange(3), AlphaBound::Estimator::Gamma, 0, {}};
  const ExtendabilityVerdict mid = zak_lvovsky(three, IntRange(0), 17);
  CHECK(mid.extendable == ExtendabilityVerdict::Extendable::Unknown);
  CHECK(mid.k_extendability_ceiling == Int(4));

  AlphaBound one{IntRange(1), AlphaBound::Estimator::Beta, 0, {}};
  CHECK(zak_lvovsky(one, IntRange(0), 25).k_extendability_ceiling == Int(2));

  // alpha = 10 >= M = 9 and h0(N(-2)) only bounded by 1: both side
  // conditions fail, so no k-ceiling may be claimed.
  AlphaBound ten{IntRange(10), AlphaBound::Estimator::Gamma, 1, {}};
  const ExtendabilityVerdict stuck = zak_lvovsky(ten, IntRange(Int(0), Int(1)), 9);
  CHECK(stuck.extendable == ExtendabilityVerdict::Extendable::Unknown);
  CHECK_FALSE(stuck.k_extendability_ceiling.has_value());
}

TEST_CASE("prime-family gate on the full analysis") {
  // gcd(5, 7) = 1 and beta = 0, but genus 71 sits in no certified family:
  // the bound is reported, the verdict is withheld.
  const CarpetAnalysis uncovered = analyze_carpet(5, 7, 0);
  CHECK(uncovered.params.prime);
  CHECK(uncovered.params.g == 71);
  CHECK(uncovered.bound.value == IntRange(0));
  CHECK(uncovered.verdict.extendable == ExtendabilityVerdict::Extendable::Unknown);

  // genus 29 = 4*7+1 is certified.
  const CarpetAnalysis covered = analyze_carpet(2, 7, 0);
  CHECK(covered.params.g == 29);
  CHECK(covered.verdict.extendable == ExtendabilityVerdict::Extendable::No);

  // Non-prime verdicts carry no family gate.
  const CarpetAnalysis nonprime = analyze_carpet(2, 6, 0);
  CHECK(nonprime.verdict.extendable == ExtendabilityVerdict::Extendable::No);
  CHECK(nonprime.verdict.k_extendability_ceiling == Int(1));
}

TEST_CASE("prime family membership") {
  CHECK(in_prime_zero_alpha_family(21));   // 4*5+1
  CHECK(in_prime_zero_alpha_family(29));
  CHECK_FALSE(in_prime_zero_alpha_family(17));  // 4*4+1: below the threshold
  CHECK(in_prime_zero_alpha_family(22));   // 18+4
  CHECK(in_prime_zero_alpha_family(43));   // 18*2+7
  CHECK(in_prime_zero_alpha_family(25));   // 4*6+1 (18+7 alone would need k >= 2)
  CHECK(in_prime_zero_alpha_family(31));   // 18+13
  CHECK(in_prime_zero_alpha_family(34));   // 18+16
  CHECK_FALSE(in_prime_zero_alpha_family(19));
  CHECK_FALSE(in_prime_zero_alpha_family(71));
}

TEST_CASE("double covers of F_0 and F_1") {
  const DoubleCoverReport wide = double_cover_alpha(5, 0);
  CHECK(wide.bound.value == IntRange(0));
  CHECK(wide.split_degeneration_applies);

  CHECK(double_cover_alpha(7, 1).bound.value == IntRange(0));

  const DoubleCoverReport narrow = double_cover_alpha(4, 0);
  CHECK(narrow.bound.value == IntRange(2));

  CHECK_THROWS_AS(double_cover_alpha(9, 2), InvalidQuery);
}

TEST_CASE("span identity and genus parity") {
  for (long long a = 2; a <= 5; ++a)
    for (int e = 0; e <= 2; ++e)
      for (long long b = a * e + 1; b <= a * e + 8; ++b) {
        const CarpetParams p = carpet_params(a, b, e);
        const HirzebruchSurface s(e);
        CHECK(p.M == p.N + cohomology(DivisorClass{a, b} + canonical_class(s), s).h0);
        CHECK(p.M == 1 + p.r * p.r * (p.g - 1));
      }

  for (long long r = 1; r <= 6; ++r)
    for (long long m = 1; m <= 10; ++m) {
      CHECK(carpet_params(r, r * m, 0).g == 2 * m + 1);
      if (r * m >= r + 1) CHECK(carpet_params(r, r * m, 1).g == 2 * m);
    }
}

TEST_CASE("estimators are non-negative wherever exact") {
  for (int e = 0; e <= 2; ++e) {
    for (long long a = 2; a <= 6; ++a)
      for (long long b = a * e + 1; b <= a * e + 10; ++b) {
        if (a == 2) {
          if (b >= e + 3) CHECK(gamma_bound(b, e).value.lo >= 0);
        } else {
          const AlphaBound beta = beta_bound(a, b, e);
          if (beta.value.exact()) CHECK(beta.value.lo >= 0);
        }
      }
  }
}
