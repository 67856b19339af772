#ifndef LEGSUM_RATIONAL_HPP
#define LEGSUM_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace legsum {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always in canonical form: denominator > 0,
/// gcd(|numerator|, denominator) = 1, zero stored as 0/1.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int v) : q_(v) {}
  Rational(long v) : q_(static_cast<signed long>(v)) {}
  Rational(const BigInt& v) : q_(v) {}
  Rational(long num, long den);
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "p", "p/q" or "-p/q" (base 10). Throws std::invalid_argument on
  /// malformed input or zero denominator.
  static Rational from_string(std::string_view text);

  const BigInt numerator() const { return q_.get_num(); }
  const BigInt denominator() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  double to_double() const { return q_.get_d(); }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const { return q_.get_str(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b) { Rational r(a); r += b; return r; }
  friend Rational operator-(const Rational& a, const Rational& b) { Rational r(a); r -= b; return r; }
  friend Rational operator*(const Rational& a, const Rational& b) { Rational r(a); r *= b; return r; }
  friend Rational operator/(const Rational& a, const Rational& b) { Rational r(a); r /= b; return r; }
  friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class q_;
};

Rational abs(const Rational& r);

/// base^exp with exact arithmetic; negative exponents require a nonzero base.
Rational pow(const Rational& base, long exp);

/// 2^exp for any sign of exp.
Rational two_pow(long exp);

// --- combinatorial primitives ---------------------------------------------

/// C(n, k); 0 outside 0 <= k <= n. Negative n is rejected.
Rational binomial(long n, long k);

/// n! for n >= 0.
Rational factorial(long n);

/// n(n-2)(n-4)...; (-1)!! = 0!! = 1. Defined for n >= -1.
Rational double_factorial(long n);

/// Rising factorial x(x+1)...(x+n-1); empty product = 1. This is
/// Gamma(x+n)/Gamma(x) without evaluating Gamma.
Rational pochhammer_rising(const Rational& x, long n);

// --- the ring Q + Q*pi ----------------------------------------------------

/// Element a + b*pi with rational a, b. Since pi is irrational the
/// representation is unique, so equality is componentwise and exact.
/// Products are defined only when at most one factor has a pi component
/// (pi^2 never arises in the integrals this library evaluates).
class PiLinear {
 public:
  PiLinear() = default;
  PiLinear(const Rational& rational_part) : rat_(rational_part) {}
  PiLinear(const Rational& rational_part, const Rational& pi_part)
      : rat_(rational_part), pi_(pi_part) {}

  static PiLinear pi_times(const Rational& coeff) { return PiLinear(Rational(0), coeff); }

  const Rational& rational_part() const { return rat_; }
  const Rational& pi_part() const { return pi_; }
  bool is_zero() const { return rat_.is_zero() && pi_.is_zero(); }

  double to_double() const;
  std::string str() const;

  friend PiLinear operator+(const PiLinear& a, const PiLinear& b) {
    return PiLinear(a.rat_ + b.rat_, a.pi_ + b.pi_);
  }
  friend PiLinear operator-(const PiLinear& a, const PiLinear& b) {
    return PiLinear(a.rat_ - b.rat_, a.pi_ - b.pi_);
  }
  friend PiLinear operator-(const PiLinear& a) { return PiLinear(-a.rat_, -a.pi_); }

  /// Throws std::domain_error when both operands have a pi component.
  friend PiLinear operator*(const PiLinear& a, const PiLinear& b);

  friend bool operator==(const PiLinear& a, const PiLinear& b) {
    return a.rat_ == b.rat_ && a.pi_ == b.pi_;
  }
  friend bool operator!=(const PiLinear& a, const PiLinear& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const PiLinear& v);

 private:
  Rational rat_;
  Rational pi_;
};

}  // namespace legsum

#endif  // LEGSUM_RATIONAL_HPP
