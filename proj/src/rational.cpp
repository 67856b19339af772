#include "legsum/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace legsum {

namespace {

BigInt parse_bigint(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  try {
    return BigInt(std::string(text), 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed integer literal: " + std::string(text));
  }
}

}  // namespace

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  mpq_set_num(q_.get_mpq_t(), num.get_mpz_t());
  mpq_set_den(q_.get_mpq_t(), den.get_mpz_t());
  q_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text), BigInt(1));
  return Rational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.q_; }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, long exp) {
  if (exp < 0) {
    if (base.is_zero()) throw std::domain_error("zero base with negative exponent");
    return pow(Rational(1) / base, -exp);
  }
  Rational result(1);
  Rational b = base;
  for (long e = exp; e > 0; e /= 2) {
    if (e % 2 != 0) result *= b;
    if (e > 1) b *= b;
  }
  return result;
}

Rational two_pow(long exp) {
  BigInt p;
  mpz_mul_2exp(p.get_mpz_t(), BigInt(1).get_mpz_t(), static_cast<mp_bitcnt_t>(exp < 0 ? -exp : exp));
  return exp >= 0 ? Rational(p) : Rational(BigInt(1), p);
}

Rational binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial with negative n");
  if (k < 0 || k > n) return Rational(0);
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

Rational factorial(long n) {
  if (n < 0) throw std::domain_error("factorial with negative argument");
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational double_factorial(long n) {
  if (n < -1) throw std::domain_error("double factorial requires n >= -1");
  if (n <= 0) return Rational(1);  // (-1)!! = 0!! = 1
  BigInt f;
  mpz_2fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational pochhammer_rising(const Rational& x, long n) {
  if (n < 0) throw std::domain_error("pochhammer with negative length");
  Rational result(1);
  Rational factor = x;
  for (long i = 0; i < n; ++i) {
    result *= factor;
    factor += Rational(1);
  }
  return result;
}

double PiLinear::to_double() const {
  return rat_.to_double() + pi_.to_double() * 3.14159265358979323846;
}

std::string PiLinear::str() const {
  if (pi_.is_zero()) return rat_.str();
  const std::string pi_term = pi_ == Rational(1)    ? "pi"
                              : pi_ == Rational(-1) ? "-pi"
                                                    : pi_.str() + "*pi";
  if (rat_.is_zero()) return pi_term;
  if (pi_.sign() < 0) {
    const PiLinear negated(Rational(0), -pi_);
    return rat_.str() + " - " + negated.str();
  }
  return rat_.str() + " + " + pi_term;
}

PiLinear operator*(const PiLinear& a, const PiLinear& b) {
  if (!a.pi_.is_zero() && !b.pi_.is_zero())
    throw std::domain_error("product would leave the Q + Q*pi ring (pi^2 term)");
  return PiLinear(a.rat_ * b.rat_, a.rat_ * b.pi_ + a.pi_ * b.rat_);
}

std::ostream& operator<<(std::ostream& os, const PiLinear& v) { return os << v.str(); }

}  // namespace legsum
