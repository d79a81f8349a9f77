#include <doctest.h>

#include "carpet/classification.hpp"

using namespace carpet;

TEST_CASE("low-genus alpha table") {
  const auto& table = low_genus_alpha_table();
  REQUIRE(table.size() == 7);

  struct Expect {
    int r, g, value;
    bool exact;
  };
  const Expect expected[] = {{2, 3, 10, true}, {2, 4, 6, true}, {2, 5, 3, true},
                             {2, 6, 1, true},  {3, 3, 4, false}, {3, 4, 1, true},
                             {4, 3, 1, true}};
  for (const Expect& want : expected) {
    bool found = false;
    for (const LowGenusAlpha& row : table) {
      if (row.r != want.r || row.g != want.g) continue;
      found = true;
      CHECK(row.alpha.value == want.value);
      CHECK(row.alpha.is_exact == want.exact);
    }
    CHECK_MESSAGE(found, "missing (", want.r, ",", want.g, ")");
  }
}

TEST_CASE("cone tangent dimensions") {
  CHECK(cone_tangent_dim(2, 3, 10, 1) == 139);
  CHECK(cone_tangent_dim(2, 4, 6, 0) == 234);
  CHECK(cone_tangent_dim(2, 5, 3, 0) == 363);
  CHECK(cone_tangent_dim(2, 6, 1, 0) == 525);
  CHECK(cone_tangent_dim(3, 4, 1, 0) == 889);
  CHECK(cone_tangent_dim(4, 3, 1, 0) == 1209);
  CHECK(mukai_triple_cone_dim(2, 5, 3) == 405);
}

TEST_CASE("classify_fano") {
  const ClassificationRecord cubic = classify_fano({3, 3});
  CHECK(cubic.status == FamilyStatus::Empty);
  CHECK(cubic.reason.find("not an integer") != std::string::npos);

  const ClassificationRecord quintic = classify_fano({5, 4});
  CHECK(quintic.status == FamilyStatus::Empty);
  CHECK(quintic.reason.find("not extendable") != std::string::npos);

  const ClassificationRecord genus6 = classify_fano({2, 6});
  CHECK(genus6.status == FamilyStatus::NonemptyIrreducible);
  REQUIRE(genus6.alpha.has_value());
  CHECK(genus6.alpha->value == 1);
  CHECK(genus6.alpha->is_exact);
  CHECK(genus6.tangent_dim_at_cone == Int(525));
  CHECK(genus6.unique_fano_through_general_k3 == true);

  const ClassificationRecord quartic = classify_fano({2, 3});
  CHECK(quartic.tangent_dim_at_cone == Int(139));
  CHECK(quartic.unique_fano_through_general_k3 == false);

  CHECK(classify_fano({4, 3}).tangent_dim_at_cone == Int(1209));
  CHECK(classify_fano({3, 4}).tangent_dim_at_cone == Int(889));

  CHECK_THROWS_AS(classify_fano({1, 5}), InvalidQuery);
  CHECK_THROWS_AS(classify_fano({2, 2}), InvalidQuery);
}

TEST_CASE("classify_fano emptiness matches the verdict list on the grid") {
  for (long long r = 2; r <= 8; ++r)
    for (long long g = 3; g <= 20; ++g) {
      const bool want_empty = (r == 2 && g >= 7) || (r == 3 && g == 3) ||
                              (r == 3 && g >= 5) || (r == 4 && g >= 4) || (r >= 5);
      const ClassificationRecord rec = classify_fano({Int(r), Int(g)});
      INFO("r=", r, " g=", g);
      CHECK((rec.status == FamilyStatus::Empty) == want_empty);
      CHECK_FALSE(rec.anchors.empty());
    }
}

TEST_CASE("classify_mukai") {
  const ClassificationRecord far = classify_mukai({6, 2, 5});
  CHECK(far.status == FamilyStatus::Empty);
  CHECK(far.reason.find("not 4-extendable") != std::string::npos);

  const ClassificationRecord five = classify_mukai({5, 2, 5});
  CHECK(five.status == FamilyStatus::NonemptyIrreducible);
  CHECK(five.tangent_dim_at_cone == Int(405));

  const ClassificationRecord four = classify_mukai({4, 2, 5});
  CHECK(four.status == FamilyStatus::NonemptyIrreducible);
  CHECK_FALSE(four.tangent_dim_at_cone.has_value());

  CHECK(classify_mukai({4, 3, 4}).status == FamilyStatus::Empty);
  CHECK(classify_mukai({4, 2, 3}).status == FamilyStatus::Empty);
  CHECK(classify_mukai({4, 2, 3}).reason.find("adjunction") != std::string::npos);
  CHECK(classify_mukai({7, 3, 3}).status == FamilyStatus::Empty);
  CHECK(classify_mukai({4, 6, 12}).status == FamilyStatus::Empty);

  CHECK_THROWS_AS(classify_mukai({3, 2, 5}), InvalidQuery);
}

TEST_CASE("classify_mukai emptiness on the grid") {
  for (long long n = 4; n <= 8; ++n)
    for (long long r = 2; r <= 6; ++r)
      for (long long g = 3; g <= 12; ++g) {
        const bool want_nonempty = (r == 2 && g == 5 && n <= 5);
        const ClassificationRecord rec = classify_mukai({Int(n), Int(r), Int(g)});
        INFO("n=", n, " r=", r, " g=", g);
        CHECK((rec.status == FamilyStatus::NonemptyIrreducible) == want_nonempty);
        CHECK_FALSE(rec.anchors.empty());
      }
}
