#ifndef LEGSUM_SERIES_HPP
#define LEGSUM_SERIES_HPP

#include <vector>

#include "legsum/polynomial.hpp"
#include "legsum/rational.hpp"

namespace legsum {

/// Formal power series over the rationals truncated at a fixed order N:
/// exactly the coefficients of z^0..z^N are stored. Binary operations
/// require equal orders; truncate explicitly first.
class Series {
 public:
  explicit Series(long order);
  explicit Series(std::vector<Rational> coeffs);

  static Series from_polynomial(const Polynomial& p, long order);
  /// (1 + z)^exponent, exponent >= 0, truncated.
  static Series binomial_power(long exponent, long order);

  long order() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  const Rational& coeff(long i) const { return c_[i]; }

  Series truncated(long new_order) const;
  /// Multiplication by z^k; coefficients pushed past the order are dropped.
  Series shifted(long k) const;
  Series scaled(const Rational& c) const;

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  /// Cauchy product truncated at the common order.
  Series operator*(const Series& o) const;

  /// Multiplicative inverse; requires a nonzero constant term.
  Series inverse() const;

  /// The unique g with g^2 * f = 1 and g(0) = 1; requires constant term 1.
  /// Coefficients follow the recurrence obtained from 2 f g' + f' g = 0.
  Series inv_sqrt() const;

  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

 private:
  std::vector<Rational> c_;
};

/// (1 - 2xz + z^2)^(-1/2) truncated at `order`; coefficient n is P_n(x).
Series generating_series(const Rational& x, long order);

using CoefficientSeq = std::vector<Rational>;

/// Direct side of the coefficient-extraction identity:
/// sum_{k=0}^n (-1)^(n-k) (2n/(n+k)) C(n+k, 2k) c_k. Requires n >= 1 and
/// at least n+1 sequence entries.
Rational extraction_sum(const CoefficientSeq& c, long n);

/// Series side of the same identity: the z^n coefficient of
/// (1-z)/(1+z) F(z/(1+z)^2), built as the split
/// sum_k c_k z^k/(1+z)^(2k+1) - sum_k c_k z^(k+1)/(1+z)^(2k+1).
Rational extraction_series_coeff(const CoefficientSeq& c, long n);

/// Batched form of extraction_series_coeff: element n is valid for
/// 1 <= n <= n_max (element 0 is unused). Requires n_max+1 entries in c.
std::vector<Rational> extraction_series_all(const CoefficientSeq& c, long n_max);

}  // namespace legsum

#endif  // LEGSUM_SERIES_HPP
