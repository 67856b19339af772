#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "legsum/selfcheck.hpp"
#include "legsum/series.hpp"

using namespace legsum;

namespace {

Series series(std::vector<Rational> c) { return Series(std::move(c)); }

Series one(long order) {
  Series s(order);
  return s + Series::from_polynomial(Polynomial::constant(Rational(1)), order);
}

}  // namespace

TEST_CASE("series multiplication") {
  const Series a = series({Rational(1), Rational(1), Rational(0), Rational(0)});
  const Series b = series({Rational(1), Rational(-1), Rational(0), Rational(0)});
  CHECK((a * b).coefficients() ==
        std::vector<Rational>{Rational(1), Rational(0), Rational(-1), Rational(0)});

  const Series geometric = series(std::vector<Rational>(5, Rational(1)));
  const Series one_minus_z =
      series({Rational(1), Rational(-1), Rational(0), Rational(0), Rational(0)});
  CHECK((geometric * one_minus_z) == one(4));

  CHECK_THROWS_AS(a * Series(7), std::invalid_argument);
  CHECK(a * b.truncated(3) == a * b);  // same order after explicit truncation
  CHECK(b.truncated(1).coefficients() == std::vector<Rational>{Rational(1), Rational(-1)});
  CHECK_THROWS_AS(b.truncated(9), std::invalid_argument);
}

TEST_CASE("series inverse") {
  CHECK(Series::binomial_power(1, 4).inverse().coefficients() ==
        std::vector<Rational>{Rational(1), Rational(-1), Rational(1), Rational(-1), Rational(1)});
  CHECK(Series::binomial_power(3, 3).inverse().coefficients() ==
        std::vector<Rational>{Rational(1), Rational(-3), Rational(6), Rational(-10)});
  CHECK(series({Rational(1)}).inverse() == series({Rational(1)}));
  CHECK_THROWS_AS(Series(3).inverse(), std::domain_error);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    std::vector<Rational> c(9);
    for (auto& v : c) v = random_rational(rng);
    if (c[0].is_zero()) c[0] = Rational(1);
    const Series f = series(c);
    CHECK(f * f.inverse() == one(8));
  }
}

TEST_CASE("inverse power series match the alternating binomial expansion") {
  for (long k = 0; k <= 5; ++k) {
    const Series inv = Series::binomial_power(2 * k + 1, 10).inverse();
    for (long m = 0; m <= 10; ++m) {
      const Rational sign(m % 2 == 0 ? 1 : -1);
      CHECK(inv.coeff(m) == sign * binomial(2 * k + m, 2 * k));
    }
  }
}

TEST_CASE("inverse square root") {
  CHECK(series({Rational(1), Rational(-2), Rational(1), Rational(0), Rational(0)})
            .inv_sqrt()
            .coefficients() == std::vector<Rational>(5, Rational(1)));
  CHECK(series({Rational(1), Rational(0), Rational(1), Rational(0), Rational(0)})
            .inv_sqrt()
            .coefficients() ==
        std::vector<Rational>{Rational(1), Rational(0), Rational(-1, 2), Rational(0),
                              Rational(3, 8)});
  CHECK(series({Rational(1), Rational(-2, 3), Rational(1)}).inv_sqrt().coeff(2) ==
        Rational(-1, 3));
  CHECK_THROWS_AS(series({Rational(2), Rational(1)}).inv_sqrt(), std::domain_error);

  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    std::vector<Rational> c(9);
    for (auto& v : c) v = random_rational(rng);
    c[0] = Rational(1);
    const Series f = series(c);
    const Series g = f.inv_sqrt();
    CHECK(g * g * f == one(8));
  }
}

TEST_CASE("generating series") {
  const Series at_one = generating_series(Rational(1), 5);
  CHECK(at_one.coefficients() == std::vector<Rational>(6, Rational(1)));

  CHECK(generating_series(Rational(0), 4).coefficients() ==
        std::vector<Rational>{Rational(1), Rational(0), Rational(-1, 2), Rational(0),
                              Rational(3, 8)});

  CHECK(generating_series(Rational(-3, 2), 2).coefficients() ==
        std::vector<Rational>{Rational(1), Rational(-3, 2), Rational(23, 8)});

  // coefficient n is P_n(x)
  for (const Rational& x : {Rational(3, 7), Rational(-2), Rational(1, 2)}) {
    const Series s = generating_series(x, 20);
    for (long n = 0; n <= 20; ++n) CHECK(s.coeff(n) == legendre_value(n, x));
  }
}

TEST_CASE("extraction identity: direct sum side") {
  CoefficientSeq delta = {Rational(1), Rational(0), Rational(0), Rational(0)};
  CHECK(extraction_sum(delta, 3) == Rational(-2));
  CoefficientSeq ones = {Rational(1), Rational(1)};
  CHECK(extraction_sum(ones, 1) == Rational(-1));
  CHECK_THROWS_AS(extraction_sum(delta, 0), std::invalid_argument);
  CHECK_THROWS_AS(extraction_sum(delta, 5), std::invalid_argument);
}

TEST_CASE("extraction identity: series side") {
  CoefficientSeq delta = {Rational(1), Rational(0), Rational(0), Rational(0)};
  CHECK(extraction_series_coeff(delta, 3) == Rational(-2));
  CoefficientSeq ones(4, Rational(1));
  CHECK(extraction_series_coeff(ones, 3) == Rational(2));

  // central-binomial coefficients with x = 1: both sides agree
  CoefficientSeq central(3);
  for (long k = 0; k <= 2; ++k) {
    const Rational sign(k % 2 == 0 ? 1 : -1);
    central[k] = binomial(2 * k, k) * sign * two_pow(-2 * k);
  }
  CHECK(extraction_series_coeff(central, 2) == extraction_sum(central, 2));
}

TEST_CASE("extraction identity holds on random sequences") {
  std::mt19937_64 rng(5);
  for (int s = 0; s < 20; ++s) {
    CoefficientSeq c(13);
    for (auto& v : c) v = random_rational(rng);
    const auto batch = extraction_series_all(c, 12);
    for (long n = 1; n <= 12; ++n) {
      CHECK(extraction_sum(c, n) == batch[n]);
      CHECK(extraction_series_coeff(c, n) == batch[n]);
    }
  }
}
