#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jp/rational.hpp"

using namespace jp;

TEST_CASE("to_string lowest terms") {
  CHECK(to_string(Rational(3, 4)) == "3/4");
  CHECK(to_string(Rational(6, 8)) == "3/4");
  CHECK(to_string(Rational(8, 4)) == "2");
  CHECK(to_string(Rational(-7, 2)) == "-7/2");
  CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("parse integers and fractions") {
  CHECK(*parse_rational("42") == Rational(42));
  CHECK(*parse_rational("-5") == Rational(-5));
  CHECK(*parse_rational("3/4") == Rational(3, 4));
  CHECK(*parse_rational("-7/2") == Rational(-7, 2));
  CHECK(*parse_rational("10/4") == Rational(5, 2));
}

TEST_CASE("parse decimals exactly") {
  CHECK(*parse_rational("3.25") == Rational(13, 4));
  CHECK(*parse_rational("0.5") == Rational(1, 2));
  CHECK(*parse_rational("-1.75") == Rational(-7, 4));
  CHECK(*parse_rational("2.0") == Rational(2));
}

TEST_CASE("parse rejects malformed input") {
  CHECK(!parse_rational(""));
  CHECK(!parse_rational("abc"));
  CHECK(!parse_rational("1/0"));
  CHECK(!parse_rational("1.2.3"));
  CHECK(!parse_rational("1/"));
  CHECK(!parse_rational("/2"));
  CHECK(!parse_rational("1e3"));
}

TEST_CASE("round trip") {
  for (const char* s : {"0", "1", "-3", "22/7", "-355/113", "65537/65536"})
    CHECK(to_string(*parse_rational(s)) == s);
}

TEST_CASE("sqrt enclosure of perfect squares is exact") {
  for (long v : {0L, 1L, 4L, 9L, 144L, 1L << 20}) {
    const Interval iv = sqrt_enclosure(Rational(v));
    CHECK(iv.exact());
    CHECK(iv.lo * iv.lo == Rational(v));
  }
  const Interval q = sqrt_enclosure(Rational(9, 16));
  CHECK(q.exact());
  CHECK(q.lo == Rational(3, 4));
}

TEST_CASE("sqrt enclosure brackets and is narrow") {
  for (const Rational x : {Rational(2), Rational(21, 8), Rational(1, 3)}) {
    const Interval iv = sqrt_enclosure(x);
    CHECK(iv.lo * iv.lo <= x);
    CHECK(iv.hi * iv.hi >= x);
    CHECK(iv.hi - iv.lo <= Rational(BigInt(1), BigInt(1) << 64));
    CHECK(iv.lo >= 0);
  }
}

TEST_CASE("sqrt enclosure rejects negatives") {
  CHECK_THROWS_AS(sqrt_enclosure(Rational(-1)), std::invalid_argument);
}
