#include <doctest.h>

#include <random>
#include <stdexcept>

#include "legsum/rational.hpp"
#include "legsum/selfcheck.hpp"

using namespace legsum;

TEST_CASE("rational canonical form") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(6, 4).numerator() == 3);
  CHECK(Rational(6, 4).denominator() == 2);
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, -2).denominator() == 2);
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational().is_zero());
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational parsing and formatting") {
  CHECK(Rational::from_string("3/7") == Rational(3, 7));
  CHECK(Rational::from_string("-4") == Rational(-4));
  CHECK(Rational::from_string("-6/4") == Rational(-3, 2));
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(-5).str() == "-5");
  CHECK_THROWS_AS(Rational::from_string("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    const Rational c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rational(0));
    if (!a.is_zero()) CHECK(a * (Rational(1) / a) == Rational(1));
  }
}

TEST_CASE("binomial values and conventions") {
  CHECK(binomial(4, 2) == Rational(6));
  CHECK(binomial(6, 3) == Rational(20));
  CHECK(binomial(3, 5) == Rational(0));
  CHECK(binomial(3, -1) == Rational(0));
  CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
}

TEST_CASE("pascal rule") {
  for (long n = 1; n <= 60; ++n) {
    for (long k = 1; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("double factorial") {
  CHECK(double_factorial(-1) == Rational(1));
  CHECK(double_factorial(0) == Rational(1));
  CHECK(double_factorial(5) == Rational(15));
  CHECK(double_factorial(6) == Rational(48));
  CHECK_THROWS_AS(double_factorial(-2), std::domain_error);
}

TEST_CASE("pochhammer rising") {
  CHECK(pochhammer_rising(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(pochhammer_rising(Rational(17, 3), 0) == Rational(1));
  CHECK(pochhammer_rising(Rational(-2), 4) == Rational(0));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    const Rational x = random_rational(rng);
    const long m = static_cast<long>(rng() % 10);
    const long n = static_cast<long>(rng() % 10);
    CHECK(pochhammer_rising(x, m + n) ==
          pochhammer_rising(x, m) * pochhammer_rising(x + Rational(m), n));
  }
}

TEST_CASE("powers") {
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow(Rational(5), 0) == Rational(1));
  CHECK(two_pow(10) == Rational(1024));
  CHECK(two_pow(-3) == Rational(1, 8));
  CHECK_THROWS_AS(pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("pi-linear ring") {
  const PiLinear a(Rational(1, 2), Rational(1, 8));
  const PiLinear b(Rational(1, 2), Rational(1, 8));
  const PiLinear c(Rational(1, 2), Rational(3, 8));
  CHECK(a == b);
  CHECK(a != c);
  CHECK((a + c).pi_part() == Rational(1, 2));
  CHECK((PiLinear(Rational(2)) * a).rational_part() == Rational(1));
  CHECK((PiLinear(Rational(2)) * a).pi_part() == Rational(1, 4));
  CHECK((a - a).is_zero());
  CHECK_THROWS_AS(a * c, std::domain_error);

  // A rational factor on either side stays in the ring.
  CHECK(PiLinear(Rational(3)) * PiLinear::pi_times(Rational(1, 3)) ==
        PiLinear::pi_times(Rational(1)));
}

TEST_CASE("pi-linear formatting") {
  CHECK(PiLinear().str() == "0");
  CHECK(PiLinear(Rational(3, 4)).str() == "3/4");
  CHECK(PiLinear::pi_times(Rational(1, 8)).str() == "1/8*pi");
  CHECK(PiLinear(Rational(1, 2), Rational(1, 8)).str() == "1/2 + 1/8*pi");
  CHECK(PiLinear(Rational(1, 2), Rational(-1, 8)).str() == "1/2 - 1/8*pi");
  CHECK(PiLinear::pi_times(Rational(1)).str() == "pi");
}
