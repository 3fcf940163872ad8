#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "twobridge/census.hpp"
#include "twobridge/formulas.hpp"

using namespace twobridge;
using namespace twobridge::formulas;

TEST_CASE("jacobsthal numbers") {
  CHECK(jacobsthal(0) == 0);
  CHECK(jacobsthal(1) == 1);
  CHECK(jacobsthal(5) == 11);
  CHECK(jacobsthal(10) == 341);
  for (int n = 2; n < 40; ++n)
    CHECK(jacobsthal(n) == jacobsthal(n - 1) + 2 * jacobsthal(n - 2));
  for (int n = 0; n < 40; ++n)
    CHECK(2 * jacobsthal(n) - jacobsthal(n + 1) == (n % 2 == 0 ? -1 : 1));
}

TEST_CASE("Ernst-Sumners counts") {
  CHECK(ernst_sumners(3) == 2);
  CHECK(ernst_sumners(4) == 1);
  CHECK(ernst_sumners(5) == 4);
  CHECK(ernst_sumners(7) == 14);
  CHECK_THROWS_AS(ernst_sumners(2), std::invalid_argument);
  for (int c = 3; c <= 14; ++c) {
    census::CensusTotals totals = census::census_totals(c);
    CHECK((totals.count + totals.palindromic_count) / 2 == ernst_sumners(c));
  }
}

TEST_CASE("closed aggregate forms") {
  CHECK(closed_W(4) == 4);
  CHECK(closed_W(5) == 10);
  CHECK(closed_Z(6) == 2);
  CHECK(closed_Z(7) == 4);
  CHECK(closed_WP(7) == 14);
  CHECK(closed_WP(9) == 34);
  CHECK(closed_ZP(7) == 2);
  CHECK(closed_ZP(9) == 4);
  CHECK(closed_WP(8) == 0);
  CHECK_THROWS_AS(closed_W(3), std::invalid_argument);
  CHECK_THROWS_AS(closed_Z(5), std::invalid_argument);
  for (int c = 4; c <= 15; ++c) {
    census::CensusTotals totals = census::census_totals(c);
    CHECK(totals.w_sum == closed_W(c));
    if (c >= 6) CHECK(totals.z_sum == closed_Z(c));
    CHECK(totals.wp_sum == closed_WP(c));
    CHECK(totals.zp_sum == closed_ZP(c));
  }
}

TEST_CASE("average unoriented genus") {
  CHECK(average_unoriented(4) == 2);
  for (int c = 3; c <= 14; ++c) CHECK(average_unoriented_census(c) == average_unoriented(c));
  for (int c = 11; c <= 18; ++c) CHECK(average_unoriented_eps1(c) == average_unoriented(c));
  CHECK_THROWS_AS(epsilon1(10), std::invalid_argument);
}

TEST_CASE("E count recursions") {
  ECounts e6 = recursive_E_counts(6);
  CHECK(e6.e_count == 2);
  CHECK(e6.delta == -2);
  ECounts e8 = recursive_E_counts(8);
  CHECK(e8.e_count == 4);
  CHECK(e8.ke_count == 2);
  ECounts e13 = recursive_E_counts(13);
  CHECK(e13.kep_count == 2);
  for (int c = 4; c <= 24; ++c) {
    census::EFamilies fam = census::enumerate_E_families(c);
    ECounts rec = recursive_E_counts(c);
    CHECK(rec.e_count == static_cast<long>(fam.all.size()));
    CHECK(rec.ke_count == static_cast<long>(fam.knots.size()));
    CHECK(rec.kep_count == static_cast<long>(fam.knot_palindromes.size()));
  }
}

TEST_CASE("epsilon2 and average crosscap") {
  CHECK(epsilon2(7) == mpq_class(1, 7));
  CHECK(average_crosscap(7) == average_unoriented(7) + mpq_class(1, 7));
  for (int c = 7; c <= 20; ++c) {
    mpq_class gap = average_crosscap(c) - average_unoriented(c);
    CHECK(gap >= 0);
    CHECK(gap < 1);
  }
  CHECK_THROWS_AS(epsilon2(6), std::invalid_argument);
}

TEST_CASE("asymptotic bounds at c = 30") {
  mpq_class bound(1, 100);
  CHECK(abs(epsilon1(30)) < bound);
  CHECK(epsilon2(30) < bound);
  CHECK(epsilon2(30) >= 0);
}

TEST_CASE("closed-form constants") {
  const ClosedFormConstants& k = closed_form_constants();
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(std::pow(k.x[i], 4) - k.x[i] * k.x[i] - k.x[i] - 1.0) <= 1e-12);
    CHECK(std::abs(std::pow(k.y[i], 4) - k.y[i] * k.y[i] + k.y[i] + 1.0) <= 1e-12);
  }
  CHECK(std::abs(k.u[0] - std::complex<double>(2.0 / 3.0)) < 1e-9);
  CHECK(std::abs(k.v[0] - std::complex<double>(-2.0)) < 1e-9);
  CHECK(k.u[1].real() == doctest::Approx(0.727).epsilon(0.002));
  CHECK(k.v[1].real() == doctest::Approx(1.090).epsilon(0.002));
  CHECK(k.x[1].real() == doctest::Approx(1.466).epsilon(0.001));
  CHECK(k.y[1].real() == doctest::Approx(-0.755).epsilon(0.001));
  CHECK(std::abs(k.u[3] - std::conj(k.u[2])) < 1e-12);
  CHECK(std::abs(k.v[3] - std::conj(k.v[2])) < 1e-12);
}

TEST_CASE("floating closed form tracks the exact counts") {
  for (int c = 7; c <= 40; ++c) {
    double exact = crosscap_excess_count(c).get_d();
    double approx = crosscap_excess_closed_numeric(c);
    CHECK(std::abs(approx - exact) <= 1e-6 * std::max(1.0, exact));
  }
  CHECK(epsilon2_closed_numeric(7) == doctest::Approx(1.0 / 7.0).epsilon(1e-9));
}
