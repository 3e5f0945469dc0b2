#include <doctest.h>

#include <limits>

#include "triplet/rational.hpp"

using namespace triplet;

TEST_CASE("floor and ceil follow the mathematical convention") {
  CHECK(floor_of(Rational(7, 2)) == 3);
  CHECK(floor_of(Rational(-7, 2)) == -4);
  CHECK(floor_of(Rational(-4)) == -4);
  CHECK(ceil_of(Rational(7, 2)) == 4);
  CHECK(ceil_of(Rational(-7, 2)) == -3);
  CHECK(ceil_of(Rational(5)) == 5);
}

TEST_CASE("floor_sqrt agrees with a linear scan") {
  for (int n = 0; n < 400; ++n) {
    std::int64_t expect = 0;
    while ((expect + 1) * (expect + 1) <= n) ++expect;
    CHECK(floor_sqrt(Rational(n)) == expect);
  }
  CHECK(floor_sqrt(Rational(49, 4)) == 3);
  CHECK_THROWS_AS(floor_sqrt(Rational(-1)), std::domain_error);
}

TEST_CASE("sqrt_upper is an upper bound within the resolution") {
  for (int n = 0; n < 200; n += 7) {
    const Rational r(n, 3);
    const Rational s = sqrt_upper(r, 64);
    CHECK(s * s >= r);
    const Rational below = s - Rational(1, 64);
    CHECK((below < Rational(0) || below * below <= r));
  }
}

TEST_CASE("to_string and parse_rational round trip") {
  for (const char* text : {"0", "5", "-5", "1/12", "-7/24"}) CHECK(to_string(parse_rational(text)) == text);
  CHECK(to_string(parse_rational("4/6")) == "2/3");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK_THROWS(parse_rational("1/2z"));
}

TEST_CASE("overflow throws instead of wrapping") {
  const Int big = std::numeric_limits<std::int64_t>::max() / 2 + 1;
  CHECK_THROWS(big * Int(2));
  CHECK_THROWS(Rational(big) + Rational(big));
}
