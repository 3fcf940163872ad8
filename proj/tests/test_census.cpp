#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "twobridge/census.hpp"
#include "twobridge/contfrac.hpp"

using namespace twobridge;
using census::Tuple;

TEST_CASE("tuple basics") {
  CHECK(census::tuple_crossing({4, 4, 2, 2, 3}) == 11);
  CHECK(census::tuple_crossing({4, -4}) == 8);
  CHECK(census::tuple_is_knot({3}));
  CHECK_FALSE(census::tuple_is_knot({2}));
  CHECK(census::tuple_is_knot({4, 4}));
  CHECK_FALSE(census::tuple_is_knot({4, 2, 2}));  // the paper's 2-component example
  CHECK(census::is_palindrome({2, 3, 2}));
  CHECK_FALSE(census::is_palindrome({2, 3}));
}

TEST_CASE("K enumeration") {
  CHECK(census::enumerate_K(4) == std::vector<Tuple>{{2, 3}, {3, 2}});
  CHECK(census::enumerate_K(2).empty());
  CHECK(census::enumerate_K(3) == std::vector<Tuple>{{2, 2}, {3}});
  CHECK(census::enumerate_K(6).size() == 10);
  auto k5 = census::enumerate_K(5);
  CHECK(k5.size() == 6);
  CHECK(std::is_sorted(k5.begin(), k5.end()));
  // every K tuple evaluates to an odd denominator
  for (const Tuple& t : census::enumerate_K(9)) {
    SubtractiveCF cf{{t.begin(), t.end()}};
    CHECK(mpz_odd_p(eval_subtractive(cf).get_den().get_mpz_t()));
  }
}

TEST_CASE("palindrome enumeration matches filtering") {
  for (int c = 3; c <= 13; ++c) {
    std::vector<Tuple> filtered;
    for (const Tuple& t : census::enumerate_K(c))
      if (census::is_palindrome(t)) filtered.push_back(t);
    CHECK(census::enumerate_KP(c) == filtered);
  }
  CHECK(census::enumerate_KP(3) == std::vector<Tuple>{{2, 2}, {3}});
  CHECK(census::enumerate_KP(8).empty());
  CHECK(census::enumerate_KP(7).size() == 6);
}

TEST_CASE("g bijection cases") {
  CHECK(census::apply_g({2, 2, 3, 2}) == Tuple{2, 2, 2, 2});
  CHECK(census::apply_g({4, 3}) == Tuple{5});
  CHECK(census::apply_g({3, 4}) == Tuple{3, 2});
  CHECK(census::apply_g({3, 2, 2, 2}) == Tuple{3, 2});
  CHECK(census::apply_g({2, 5}) == Tuple{2, 3});
  CHECK(census::g_case({3, 2, 2, 2}) == census::GCase::F1);
  CHECK(census::g_case({2, 2, 3, 2}) == census::GCase::F2);
  CHECK(census::g_case({2, 2, 2, 3}) == census::GCase::F3);
  CHECK(census::g_case({2, 5}) == census::GCase::F4);
  CHECK_THROWS_AS(census::apply_g({2, 3}), std::invalid_argument);  // c = 4
}

TEST_CASE("g inverse reconstructs") {
  for (int c = 5; c <= 12; ++c)
    census::for_each_K(c, [&](const Tuple& t) {
      census::GCase which = census::g_case(t);
      CHECK(census::apply_g_inverse(census::apply_g(t), which) == t);
    });
}

TEST_CASE("gP bijection cases") {
  CHECK(census::apply_gP({2, 2, 3, 2, 2}) == Tuple{3});
  CHECK(census::apply_gP({2, 2, 2, 2, 2, 2}) == Tuple{2, 2});
  CHECK(census::apply_gP({2, 3, 3, 2}) == Tuple{2, 2, 2, 2});
  CHECK(census::apply_gP({3, 3, 3}) == Tuple{5});
  CHECK(census::apply_gP({4, 4}) == Tuple{2, 2});
  CHECK(census::apply_gP({7}) == Tuple{3});
  CHECK(census::apply_gP({2, 4, 2, 4, 2}) == Tuple{2, 3, 2, 3, 2});
  CHECK(census::apply_gP({2, 5, 2}) == Tuple{2, 3, 2});  // short p2 case
  CHECK(census::apply_gP({3, 5, 3}) == Tuple{7});        // short p3 case
  CHECK_THROWS_AS(census::apply_gP({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(census::apply_gP({3, 3}), std::invalid_argument);  // c = 5
}

TEST_CASE("delta tables on marked endings") {
  CHECK(census::delta_wz_of_g({2, 2, 3, 2}).dw == 2);   // f2 on (...,2,3,2)
  CHECK(census::delta_wz_of_g({2, 3, 2, 2}).dz == 1);   // f1 on (...,2,3,2,2)
  CHECK(census::delta_wz_of_g({3, 2, 2, 2}).dw == 0);   // unmarked f1 ending
  CHECK(census::delta_wz_of_g({3, 2, 2, 2}).dz == 0);
  CHECK(census::delta_wz_of_g({2, 2, 4, 2}).dz == -1);  // f2 on (...,2,4,2)
  CHECK(census::delta_wz_of_g({2, 2, 3, 4}).dz == -1);  // f4 on (...,2,3,4)
  CHECK(census::delta_wz_of_gP({2, 2, 3, 2, 2}).dz == 1);
  CHECK(census::delta_wz_of_gP({2, 3, 3, 2}).dw == 3);
  CHECK(census::delta_wz_of_gP({2, 3, 3, 2}).dz == 1);
}

TEST_CASE("census totals") {
  census::CensusTotals c4 = census::census_totals(4);
  CHECK(c4.count == 2);
  CHECK(c4.w_sum == 4);
  CHECK(c4.z_sum == 0);
  census::CensusTotals c5 = census::census_totals(5);
  CHECK(c5.w_sum == 10);
  CHECK(c5.z_sum == 0);
  census::CensusTotals c6 = census::census_totals(6);
  CHECK(c6.z_sum == 2);
  census::CensusTotals c7 = census::census_totals(7);
  CHECK(c7.z_sum == 4);
  CHECK(c7.palindromic_count == 6);
  CHECK(c7.wp_sum == 14);
  CHECK(c7.zp_sum == 2);
}

TEST_CASE("E families") {
  census::EFamilies e4 = census::enumerate_E_families(4);
  CHECK(e4.all == std::vector<Tuple>{{-4}, {4}});
  CHECK(e4.knots.empty());
  CHECK(census::enumerate_E_families(5).all.empty());
  census::EFamilies e7 = census::enumerate_E_families(7);
  CHECK(e7.knots == std::vector<Tuple>{{-4, -4}, {4, 4}});
  CHECK(e7.links.empty());
  census::EFamilies e11 = census::enumerate_E_families(11);
  CHECK(e11.knot_palindromes == std::vector<Tuple>{{-6, -6}, {6, 6}});
  census::EFamilies e13 = census::enumerate_E_families(13);
  CHECK(e13.knot_palindromes == std::vector<Tuple>{{-4, -4, -4, -4}, {4, 4, 4, 4}});
  census::EFamilies e0 = census::enumerate_E_families(0);
  CHECK(e0.all == std::vector<Tuple>{{}});
  CHECK(e0.knots == std::vector<Tuple>{{}});
  // |E(8)| = |E(6)| + |E(5)| + |E(4)| = 4
  CHECK(census::enumerate_E_families(8).all.size() == 4);
  // parity split
  for (int c = 4; c <= 14; ++c) {
    census::EFamilies fam = census::enumerate_E_families(c);
    for (const Tuple& t : fam.knots) {
      CHECK(t.size() % 2 == 0);
      CHECK(census::tuple_is_knot(t));
    }
    for (const Tuple& t : fam.links) {
      CHECK(t.size() % 2 == 1);
      CHECK_FALSE(census::tuple_is_knot(t));
    }
  }
}
