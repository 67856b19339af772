#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "legsum/polynomial.hpp"

using namespace legsum;

namespace {

Polynomial poly(std::vector<Rational> c) { return Polynomial(std::move(c)); }

}  // namespace

TEST_CASE("polynomial bookkeeping") {
  CHECK(Polynomial().degree() == -1);
  CHECK(Polynomial().is_zero());
  CHECK(poly({Rational(1), Rational(0)}).degree() == 0);  // trailing zeros trimmed
  CHECK(poly({Rational(0)}).is_zero());
  CHECK(Polynomial::monomial(3, Rational(2)).coeff(3) == Rational(2));
  CHECK(poly({Rational(1)}).coeff(5) == Rational(0));
}

TEST_CASE("legendre via leibniz sum") {
  CHECK(legendre_via_sum(0) == poly({Rational(1)}));
  CHECK(legendre_via_sum(2) == poly({Rational(-1, 2), Rational(0), Rational(3, 2)}));
  CHECK(legendre_via_sum(3) ==
        poly({Rational(0), Rational(-3, 2), Rational(0), Rational(5, 2)}));
}

TEST_CASE("legendre via recursion") {
  CHECK(legendre_via_recursion(1) == poly({Rational(0), Rational(1)}));
  CHECK(legendre_via_recursion(2) == poly({Rational(-1, 2), Rational(0), Rational(3, 2)}));
  CHECK(legendre_via_recursion(5) == legendre_via_sum(5));
}

TEST_CASE("legendre cross-construction and parity") {
  for (long n = 0; n <= 25; ++n) {
    const Polynomial p = legendre_via_recursion(n);
    CHECK(legendre_via_sum(n) == p);
    CHECK(p.degree() == n);
    for (long i = 0; i <= n; ++i) {
      if ((n - i) % 2 != 0) CHECK(p.coeff(i).is_zero());
    }
  }
}

TEST_CASE("recursion residual is the zero polynomial") {
  for (long n = 1; n <= 25; ++n) {
    const Polynomial residual = legendre_via_recursion(n + 1).scaled(Rational(n + 1)) -
                                legendre_via_recursion(n).times_x().scaled(Rational(2 * n + 1)) +
                                legendre_via_recursion(n - 1).scaled(Rational(n));
    CHECK(residual.is_zero());
  }
}

TEST_CASE("evaluation") {
  for (long n = 0; n <= 30; ++n) CHECK(legendre_via_recursion(n).eval(Rational(1)) == Rational(1));
  for (long n = 0; n <= 100; ++n) CHECK(legendre_value(n, Rational(1)) == Rational(1));
  CHECK(legendre_via_recursion(4).eval(Rational(0)) == Rational(3, 8));
  CHECK(legendre_via_recursion(2).eval(Rational(-3, 2)) == Rational(23, 8));
  for (long n = 0; n <= 50; ++n) {
    CHECK(legendre_value(2 * n + 1, Rational(0)) == Rational(0));
    const Rational sign(n % 2 == 0 ? 1 : -1);
    CHECK(legendre_value(2 * n, Rational(0)) == sign * two_pow(-2 * n) * binomial(2 * n, n));
  }
}

TEST_CASE("compose_linear") {
  const Polynomial p1 = legendre_via_recursion(1);
  const Polynomial p2 = legendre_via_recursion(2);
  CHECK(p1.compose_linear(Rational(2), Rational(-1), 1) == poly({Rational(-1), Rational(2)}));
  CHECK(p2.compose_linear(Rational(2), Rational(-1), 1) ==
        poly({Rational(1), Rational(-6), Rational(6)}));
  CHECK(p2.compose_linear(Rational(2), Rational(-1), 2) ==
        poly({Rational(1), Rational(0), Rational(-6), Rational(0), Rational(6)}));
  CHECK_THROWS_AS(p2.compose_linear(Rational(2), Rational(-1), 3), std::invalid_argument);

  // degree doubles for the quadratic substitution
  CHECK(legendre_via_recursion(7).compose_linear(Rational(2), Rational(-1), 2).degree() == 14);
}

TEST_CASE("integrate_interval") {
  const Polynomial shifted =
      legendre_via_recursion(2).compose_linear(Rational(2), Rational(-1), 1);
  CHECK(shifted.integrate_interval(Rational(0), Rational(1)) == Rational(0));
  const Polynomial product = legendre_via_recursion(1) * legendre_via_recursion(2);
  CHECK(product.integrate_interval(Rational(-1), Rational(1)) == Rational(0));
  CHECK(Polynomial::constant(Rational(1)).integrate_interval(Rational(-1), Rational(1)) ==
        Rational(2));
  CHECK(Polynomial().integrate_interval(Rational(0), Rational(5)) == Rational(0));
}

TEST_CASE("orthogonality on a small grid") {
  std::vector<Polynomial> p;
  for (long n = 0; n <= 12; ++n) p.push_back(legendre_via_recursion(n));
  for (long n = 1; n <= 12; ++n) {
    for (long m = 0; m < n; ++m) {
      CHECK((p[n] * p[m]).integrate_interval(Rational(-1), Rational(1)) == Rational(0));
    }
  }
}
