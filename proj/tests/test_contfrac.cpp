#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "twobridge/contfrac.hpp"

using namespace twobridge;

namespace {

AdditiveCF add(std::vector<long long> v) { return AdditiveCF{std::move(v)}; }
SubtractiveCF sub(std::vector<long long> v) { return SubtractiveCF{std::move(v)}; }

}  // namespace

TEST_CASE("additive evaluation") {
  CHECK(eval_additive(add({3, 1, 2, 3, 2})) == make_fraction(23, 85));
  CHECK(eval_additive(add({2})) == make_fraction(1, 2));
  CHECK(eval_additive(add({2, 1, 1})) == make_fraction(2, 5));
  CHECK(eval_additive(add({})) == Fraction(0));
  CHECK(eval_additive(add({-2, -2})) == make_fraction(-2, 5));
}

TEST_CASE("additive evaluation reports the offending prefix") {
  // tail of [1,-1] evaluates to -1, so the outer denominator 1 + (-1) vanishes
  try {
    eval_additive(add({1, -1}));
    FAIL("expected a domain_error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("prefix [1]") != std::string::npos);
  }
}

TEST_CASE("subtractive evaluation") {
  CHECK(eval_subtractive(sub({4, 4, 2, 2, 3})) == make_fraction(23, 85));
  CHECK(eval_subtractive(sub({3})) == make_fraction(1, 3));
  CHECK(eval_subtractive(sub({-2, -2})) == make_fraction(-2, 3));
  CHECK(eval_subtractive(sub({3, 2})) == make_fraction(2, 5));
  CHECK_THROWS_AS(eval_subtractive(sub({1, 3})), std::invalid_argument);
}

TEST_CASE("positive additive form") {
  CHECK(to_positive_additive(make_fraction(23, 85)).coeffs == std::vector<long long>{3, 1, 2, 3, 2});
  CHECK(to_positive_additive(make_fraction(1, 3)).coeffs == std::vector<long long>{3});
  CHECK(to_positive_additive(make_fraction(2, 5)).coeffs == std::vector<long long>{2, 1, 1});
  CHECK_THROWS_AS(to_positive_additive(make_fraction(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(to_positive_additive(make_fraction(-1, 3)), std::invalid_argument);
}

TEST_CASE("positive subtractive form") {
  CHECK(to_positive_subtractive(make_fraction(23, 85)).coeffs ==
        std::vector<long long>{4, 4, 2, 2, 3});
  CHECK(to_positive_subtractive(make_fraction(1, 3)).coeffs == std::vector<long long>{3});
  CHECK(to_positive_subtractive(make_fraction(2, 5)).coeffs == std::vector<long long>{3, 2});
}

TEST_CASE("even subtractive form") {
  CHECK(to_even_subtractive(make_fraction(1, 3)).coeffs == std::vector<long long>{-2, -2});
  CHECK(to_even_subtractive(make_fraction(2, 5)).coeffs == std::vector<long long>{2, -2});
  CHECK(to_even_subtractive(make_fraction(4, 15)).coeffs == std::vector<long long>{4, 4});
  CHECK(eval_subtractive(to_even_subtractive(make_fraction(2, 5))) == make_fraction(2, 5));
  CHECK(eval_subtractive(to_even_subtractive(make_fraction(1, 3))) == make_fraction(-2, 3));
  CHECK_THROWS_AS(to_even_subtractive(make_fraction(1, 2)), std::invalid_argument);
}

TEST_CASE("crossing number") {
  CHECK(crossing_number(sub({4, 4, 2, 2, 3})) == 11);
  CHECK(crossing_number(sub({7})) == 7);
  CHECK(crossing_number(sub({-5})) == 5);
  CHECK(crossing_number(sub({4, 4})) == 7);
  CHECK(crossing_number(sub({-2, -2})) == 3);
  CHECK(crossing_number(sub({4, -4})) == 8);
}

TEST_CASE("classification and Schubert equivalence") {
  CHECK(classify(make_fraction(1, 3)) == LinkClass::Knot);
  CHECK(classify(make_fraction(1, 2)) == LinkClass::TwoComponentLink);
  CHECK(classify(make_fraction(23, 85)) == LinkClass::Knot);
  CHECK(schubert_equivalent(make_fraction(2, 5), make_fraction(3, 5)));
  CHECK(schubert_equivalent(make_fraction(23, 85), make_fraction(23, 85)));
  CHECK_FALSE(schubert_equivalent(make_fraction(1, 3), make_fraction(1, 5)));
  CHECK_FALSE(schubert_equivalent(make_fraction(1, 5), make_fraction(2, 5)));
}

TEST_CASE("canonical normalization") {
  CHECK(normalize_canonical(make_fraction(-2, 3)) == make_fraction(1, 3));
  CHECK(normalize_canonical(make_fraction(7, 5)) == make_fraction(2, 5));
  CHECK(normalize_canonical(make_fraction(23, 85)) == make_fraction(23, 85));
  CHECK_THROWS_AS(normalize_canonical(Fraction(2)), std::invalid_argument);
  CHECK_THROWS_AS(normalize_canonical(Fraction(0)), std::invalid_argument);
}

TEST_CASE("round trips on random fractions") {
  std::mt19937_64 rng(7);
  int done = 0;
  while (done < 1000) {
    long q = std::uniform_int_distribution<long>(2, 1 << 15)(rng);
    long p = std::uniform_int_distribution<long>(1, q - 1)(rng);
    if (std::gcd(p, q) != 1) continue;
    Fraction f = make_fraction(p, q);
    CHECK(eval_additive(to_positive_additive(f)) == f);
    CHECK(eval_subtractive(to_positive_subtractive(f)) == f);
    if (q % 2 == 1) {
      Fraction even = eval_subtractive(to_even_subtractive(f));
      CHECK((even == f || even == f - 1));
    }
    ++done;
  }
}

TEST_CASE("string forms") {
  CHECK(fraction_to_string(make_fraction(23, 85)) == "23/85");
  CHECK(parse_fraction("23/85") == make_fraction(23, 85));
  CHECK(parse_fraction("-62/85") == make_fraction(-62, 85));
  CHECK_THROWS_AS(parse_fraction("85"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fraction("1/0"), std::invalid_argument);
  CHECK(format_subtractive(sub({4, 4, 2, 2, 3})) == "sub:[4,4,2,2,3]");
  CHECK(format_additive(add({3, 1, 2, 3, 2})) == "add:[3,1,2,3,2]");
  CHECK(format_even_subtractive(sub({2, -2})) == "even:[2,-2]");
  CHECK(parse_fraction_or_cf("sub:[4,4,2,2,3]") == make_fraction(23, 85));
  CHECK(parse_fraction_or_cf("add:[3,1,2,3,2]") == make_fraction(23, 85));
  CHECK(parse_fraction_or_cf("even:[2,-2]") == make_fraction(2, 5));
  CHECK(parse_fraction_or_cf("23/85") == make_fraction(23, 85));
  CHECK_THROWS_AS(parse_fraction_or_cf("even:[3,2]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fraction_or_cf("sub:[4,"), std::invalid_argument);
}
