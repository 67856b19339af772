#ifndef LEGSUM_POLYNOMIAL_HPP
#define LEGSUM_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "legsum/rational.hpp"

namespace legsum {

/// Dense polynomial with exact rational coefficients, stored in ascending
/// degree. The leading coefficient is nonzero; the zero polynomial is the
/// empty list (degree -1). Values are immutable after construction.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(long degree, const Rational& coeff);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(long i) const;

  /// Horner evaluation.
  Rational eval(const Rational& x) const;

  /// p(a*x^d + b) expanded into monomial coefficients; d must be 1 or 2.
  Polynomial compose_linear(const Rational& a, const Rational& b, int d) const;

  /// Exact definite integral over [a, b] via term-wise antiderivative.
  Rational integrate_interval(const Rational& a, const Rational& b) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_x() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  std::vector<Rational> coeffs_;
};

/// P_n expanded from 2^-n sum_k C(n,k)^2 (x+1)^(n-k) (x-1)^k.
Polynomial legendre_via_sum(long n);

/// P_n from P_0 = 1, P_1 = x, (n+1)P_{n+1} = (2n+1)x P_n - n P_{n-1}.
Polynomial legendre_via_recursion(long n);

/// P_n(x) by the same three-term recursion applied to values.
Rational legendre_value(long n, const Rational& x);

/// (P_n(x), P_{n-1}(x)) in one pass; the second component is 0 for n = 0.
std::pair<Rational, Rational> legendre_value_pair(long n, const Rational& x);

}  // namespace legsum

#endif  // LEGSUM_POLYNOMIAL_HPP
