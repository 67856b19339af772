#include "legsum/integrals.hpp"

#include <stdexcept>

namespace legsum {

Rational power_log_moment(long p) {
  if (p < 0) throw std::domain_error("power_log_moment requires p >= 0");
  return Rational(1) / Rational(BigInt(p + 1) * BigInt(p + 1));
}

Rational poly_log_moment(const Polynomial& p) {
  Rational sum(0);
  const auto& c = p.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (!c[j].is_zero()) sum += c[j] * power_log_moment(static_cast<long>(j));
  }
  return sum;
}

Rational gautschi_value(long m, long n) {
  if (m < 0 || n <= m) throw std::domain_error("gautschi_value requires n > m >= 0");
  const Rational sign((n - m) % 2 == 0 ? 1 : -1);
  return sign * factorial(m) * factorial(m) * factorial(n - m - 1) / factorial(n + m + 1);
}

PiLinear arcsin_power_moment(long k) {
  if (k < 1 || k % 2 == 0) throw std::domain_error("arcsin_power_moment requires odd k >= 1");
  const long n = (k + 1) / 2;
  const Rational coeff = (Rational(1) - two_pow(-2 * n) * binomial(2 * n, n)) / Rational(4 * n);
  return PiLinear::pi_times(coeff);
}

PiLinear arcsin_poly_moment(const Polynomial& p) {
  PiLinear sum;
  const auto& c = p.coefficients();
  for (std::size_t j = 1; j < c.size(); j += 2) {
    if (!c[j].is_zero())
      sum = sum + PiLinear(Rational(2) * c[j]) * arcsin_power_moment(static_cast<long>(j));
  }
  return sum;
}

PiLinear binom_arcsin_moment_closed(long k) {
  if (k < 0) throw std::domain_error("binom_arcsin_moment_closed requires k >= 0");
  const Rational k1(k + 1);
  const Rational coeff =
      two_pow(k) / k1 - two_pow(-k) * Rational(2 * k + 1) * binomial(2 * k, k) / (k1 * k1);
  return PiLinear::pi_times(coeff);
}

PiLinear legendre_arcsin_value(long n) {
  if (n < 0) throw std::domain_error("legendre_arcsin_value requires n >= 0");
  if (n % 2 == 0) return PiLinear();
  const Rational r = double_factorial(n - 2) / (two_pow((n + 1) / 2) * factorial((n + 1) / 2));
  return PiLinear::pi_times(r * r);
}

Rational legendre_even_moment_termwise(const Rational& mu, long n) {
  if (mu.sign() <= 0) throw std::domain_error("termwise moment requires mu > 0");
  const Polynomial p = legendre_via_recursion(n).compose_linear(Rational(2), Rational(-1), 2);
  Rational sum(0);
  const auto& c = p.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (!c[j].is_zero()) sum += c[j] / (Rational(static_cast<long>(j)) + Rational(2) * mu);
  }
  return sum;
}

}  // namespace legsum
