#include <doctest.h>

#include <liegrad/errors.hpp>
#include <liegrad/rational.hpp>

#include "test_util.hpp"

#include <random>

using namespace liegrad;

TEST_CASE("rational parsing accepts n and n/d") {
  CHECK(parse_rational("0") == 0);
  CHECK(parse_rational("17") == 17);
  CHECK(parse_rational("-3/2") == Rational(-3, 2));
  CHECK(parse_rational("4/6") == Rational(2, 3)); // canonicalized
  CHECK(format_rational(parse_rational("4/6")) == "2/3");
  CHECK(format_rational(parse_rational("-8/2")) == "-4");
}

TEST_CASE("rational parsing rejects malformed input") {
  for (const char* bad : {"", "-", "1.5", "1/0", "1/-2", "+3", "a", "3/ 2", " 1"}) {
    CHECK_THROWS_AS(parse_rational(bad), InputError);
  }
}

TEST_CASE("rational invariants: lowest terms, positive denominator") {
  std::mt19937 rng(7001);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational q = testing::random_rational(rng);
    CHECK(q.get_den() > 0);
    CHECK(gcd(mpz_class(abs(q.get_num())), mpz_class(q.get_den())) <= 1);
  }
}

TEST_CASE("arithmetic is exact") {
  std::mt19937 rng(7002);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = testing::random_rational(rng);
    Rational b = testing::random_rational(rng);
    CHECK((a + b) - b == a);
    if (b == 0) b = 1;
    CHECK((a * b) / b == a);
  }
}
