#include "doctest.h"

#include <stdexcept>

#include "simpson/rational.hpp"

using simpson::Rational;

TEST_SUITE("rational") {
  TEST_CASE("reduction and canonical form") {
    CHECK(Rational(6, 10) == Rational(3, 5));
    CHECK(Rational(6, 10).num() == 3);
    CHECK(Rational(6, 10).den() == 5);
    CHECK(Rational(-4, 8) == Rational(-1, 2));
    CHECK(Rational(4, -8) == Rational(-1, 2));
    CHECK(Rational(0, 7).den() == 1);
  }

  TEST_CASE("arithmetic") {
    CHECK(Rational(1, 5) + Rational(1, 1) + Rational(3, 4) ==
          Rational(39, 20));
    CHECK(Rational(3, 5) - Rational(1, 2) == Rational(1, 10));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) / Rational(2, 3) == Rational(3, 4));
    CHECK(-Rational(1, 3) == Rational(-1, 3));
  }

  TEST_CASE("exact comparisons") {
    CHECK(Rational(1, 3) < Rational(34, 100));
    CHECK(Rational(2, 6) == Rational(1, 3));
    CHECK(Rational(23, 27) - Rational(68, 81) == Rational(1, 81));
    // values that double arithmetic cannot separate
    CHECK(Rational(1'000'000'000'000'000'000, 3) >
          Rational(999'999'999'999'999'999, 3));
  }

  TEST_CASE("error cases") {
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::invalid_argument);
    const Rational huge(INT64_MAX - 1, 1);
    CHECK_THROWS_AS(huge * huge, std::overflow_error);
  }

  TEST_CASE("fraction rendering") {
    CHECK(Rational(3, 5).fraction_str() == "3/5");
    CHECK(Rational(2).fraction_str() == "2/1");
    CHECK(Rational(-1, 10).fraction_str() == "-1/10");
  }

  TEST_CASE("decimal rendering rounds half away from zero") {
    CHECK(Rational(3, 4).decimal_str() == "0.75");
    CHECK(Rational(3, 5).decimal_str() == "0.60");
    CHECK(Rational(1, 10).decimal_str() == "0.10");
    CHECK(Rational(1, 81).decimal_str() == "0.01");
    CHECK(Rational(39, 20).decimal_str() == "1.95");
    CHECK(Rational(1, 200).decimal_str() == "0.01");   // exact half, up
    CHECK(Rational(-1, 200).decimal_str() == "-0.01");  // away from zero
    CHECK(Rational(-1, 1000).decimal_str() == "0.00");  // no negative zero
    CHECK(Rational(47, 40).decimal_str(3) == "1.175");
    CHECK(Rational(2, 1).decimal_str(0) == "2");
  }
}
