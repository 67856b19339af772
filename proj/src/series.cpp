#include "legsum/series.hpp"

#include <stdexcept>

namespace legsum {

Series::Series(long order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  c_.assign(order + 1, Rational(0));
}

Series::Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("series needs at least the constant term");
}

Series Series::from_polynomial(const Polynomial& p, long order) {
  Series s(order);
  const long top = std::min<long>(order, p.degree());
  for (long i = 0; i <= top; ++i) s.c_[i] = p.coeff(i);
  return s;
}

Series Series::binomial_power(long exponent, long order) {
  if (exponent < 0) throw std::invalid_argument("binomial_power requires exponent >= 0");
  Series s(order);
  for (long i = 0; i <= std::min(exponent, order); ++i) s.c_[i] = binomial(exponent, i);
  return s;
}

Series Series::truncated(long new_order) const {
  if (new_order > order()) throw std::invalid_argument("cannot extend a truncated series");
  return Series(std::vector<Rational>(c_.begin(), c_.begin() + new_order + 1));
}

Series Series::shifted(long k) const {
  if (k < 0) throw std::invalid_argument("shift must be nonnegative");
  Series s(order());
  for (long i = 0; i + k <= order(); ++i) s.c_[i + k] = c_[i];
  return s;
}

Series Series::scaled(const Rational& c) const {
  Series s(order());
  for (long i = 0; i <= order(); ++i) s.c_[i] = c_[i] * c;
  return s;
}

Series Series::operator+(const Series& o) const {
  if (order() != o.order()) throw std::invalid_argument("series order mismatch");
  Series s(order());
  for (long i = 0; i <= order(); ++i) s.c_[i] = c_[i] + o.c_[i];
  return s;
}

Series Series::operator-(const Series& o) const {
  if (order() != o.order()) throw std::invalid_argument("series order mismatch");
  Series s(order());
  for (long i = 0; i <= order(); ++i) s.c_[i] = c_[i] - o.c_[i];
  return s;
}

Series Series::operator*(const Series& o) const {
  if (order() != o.order()) throw std::invalid_argument("series order mismatch");
  Series s(order());
  for (long i = 0; i <= order(); ++i) {
    if (c_[i].is_zero()) continue;
    for (long j = 0; i + j <= order(); ++j) {
      if (!o.c_[j].is_zero()) s.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  return s;
}

Series Series::inverse() const {
  if (c_[0].is_zero()) throw std::domain_error("series inverse requires a nonzero constant term");
  Series g(order());
  g.c_[0] = Rational(1) / c_[0];
  for (long m = 1; m <= order(); ++m) {
    Rational acc(0);
    for (long i = 1; i <= m; ++i) {
      if (!c_[i].is_zero()) acc += c_[i] * g.c_[m - i];
    }
    g.c_[m] = -acc * g.c_[0];
  }
  return g;
}

Series Series::inv_sqrt() const {
  if (c_[0] != Rational(1)) throw std::domain_error("inv_sqrt requires constant term 1");
  Series g(order());
  g.c_[0] = Rational(1);
  // [z^m] of 2 f g' + f' g = 0 isolates g_{m+1}:
  // 2(m+1) g_{m+1} = -( 2 sum_{i=1}^m f_i (m-i+1) g_{m-i+1}
  //                     + sum_{i=0}^m (i+1) f_{i+1} g_{m-i} ).
  for (long m = 0; m < order(); ++m) {
    Rational acc(0);
    for (long i = 1; i <= m; ++i) {
      if (!c_[i].is_zero()) acc += Rational(2 * (m - i + 1)) * c_[i] * g.c_[m - i + 1];
    }
    for (long i = 0; i <= m; ++i) {
      if (!c_[i + 1].is_zero()) acc += Rational(i + 1) * c_[i + 1] * g.c_[m - i];
    }
    g.c_[m + 1] = -acc / Rational(2 * (m + 1));
  }
  return g;
}

Series generating_series(const Rational& x, long order) {
  Series f(order);
  std::vector<Rational> c(order + 1, Rational(0));
  c[0] = Rational(1);
  if (order >= 1) c[1] = Rational(-2) * x;
  if (order >= 2) c[2] = Rational(1);
  return Series(std::move(c)).inv_sqrt();
}

namespace {

void check_extraction_args(const CoefficientSeq& c, long n) {
  if (n < 1) throw std::invalid_argument("extraction identity requires n >= 1");
  if (static_cast<long>(c.size()) < n + 1)
    throw std::invalid_argument("coefficient sequence shorter than n + 1");
}

}  // namespace

Rational extraction_sum(const CoefficientSeq& c, long n) {
  check_extraction_args(c, n);
  Rational sum(0);
  for (long k = 0; k <= n; ++k) {
    if (c[k].is_zero()) continue;
    const Rational sign((n - k) % 2 == 0 ? 1 : -1);
    sum += sign * Rational(2 * n, n + k) * binomial(n + k, 2 * k) * c[k];
  }
  return sum;
}

Rational extraction_series_coeff(const CoefficientSeq& c, long n) {
  check_extraction_args(c, n);
  return extraction_series_all({c.begin(), c.begin() + n + 1}, n)[n];
}

std::vector<Rational> extraction_series_all(const CoefficientSeq& c, long n_max) {
  check_extraction_args(c, n_max);
  Series acc(n_max);
  for (long k = 0; k <= n_max; ++k) {
    if (c[k].is_zero()) continue;
    const Series inv = Series::binomial_power(2 * k + 1, n_max).inverse();
    const Series term = inv.shifted(k) - inv.shifted(k + 1);
    acc = acc + term.scaled(c[k]);
  }
  return acc.coefficients();
}

}  // namespace legsum
