#include "legsum/polynomial.hpp"

#include <stdexcept>

namespace legsum {

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(long degree, const Rational& coeff) {
  if (degree < 0) throw std::domain_error("monomial with negative degree");
  if (coeff.is_zero()) return Polynomial();
  std::vector<Rational> c(degree + 1);
  c.back() = coeff;
  return Polynomial(std::move(c));
}

Rational Polynomial::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return Rational(0);
  return coeffs_[i];
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::compose_linear(const Rational& a, const Rational& b, int d) const {
  if (d != 1 && d != 2) throw std::invalid_argument("compose_linear requires d in {1, 2}");
  // Horner in the inner polynomial a*x^d + b: acc <- acc*(a*x^d + b) + c_i.
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    std::vector<Rational> next(acc.is_zero() ? 1 : acc.coeffs_.size() + d, Rational(0));
    for (std::size_t j = 0; j < acc.coeffs_.size(); ++j) {
      next[j] += acc.coeffs_[j] * b;
      next[j + d] += acc.coeffs_[j] * a;
    }
    next[0] += *it;
    acc = Polynomial(std::move(next));
  }
  return acc;
}

Rational Polynomial::integrate_interval(const Rational& a, const Rational& b) const {
  Rational sum(0);
  Rational pa = a;
  Rational pb = b;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (!coeffs_[j].is_zero()) sum += coeffs_[j] * (pb - pa) / Rational(static_cast<long>(j) + 1);
    pa *= a;
    pb *= b;
  }
  return sum;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return Polynomial();
  std::vector<Rational> r(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i] * c;
  return Polynomial(std::move(r));
}

Polynomial Polynomial::times_x() const {
  if (is_zero()) return Polynomial();
  std::vector<Rational> c(coeffs_.size() + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + 1] = coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial legendre_via_sum(long n) {
  if (n < 0) throw std::domain_error("legendre index must be nonnegative");
  // Power tables for (x+1)^i and (x-1)^i, i = 0..n.
  std::vector<Polynomial> plus{Polynomial::constant(Rational(1))};
  std::vector<Polynomial> minus{Polynomial::constant(Rational(1))};
  const Polynomial x_plus_1({Rational(1), Rational(1)});
  const Polynomial x_minus_1({Rational(-1), Rational(1)});
  for (long i = 1; i <= n; ++i) {
    plus.push_back(plus.back() * x_plus_1);
    minus.push_back(minus.back() * x_minus_1);
  }
  Polynomial acc;
  for (long k = 0; k <= n; ++k) {
    const Rational w = binomial(n, k) * binomial(n, k);
    acc = acc + (plus[n - k] * minus[k]).scaled(w);
  }
  return acc.scaled(two_pow(-n));
}

Polynomial legendre_via_recursion(long n) {
  if (n < 0) throw std::domain_error("legendre index must be nonnegative");
  Polynomial prev = Polynomial::constant(Rational(1));
  if (n == 0) return prev;
  Polynomial cur({Rational(0), Rational(1)});
  for (long m = 1; m < n; ++m) {
    Polynomial next = cur.times_x().scaled(Rational(2 * m + 1, m + 1)) -
                      prev.scaled(Rational(m, m + 1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Rational legendre_value(long n, const Rational& x) { return legendre_value_pair(n, x).first; }

std::pair<Rational, Rational> legendre_value_pair(long n, const Rational& x) {
  if (n < 0) throw std::domain_error("legendre index must be nonnegative");
  if (n == 0) return {Rational(1), Rational(0)};
  Rational prev(1);
  Rational cur = x;
  for (long m = 1; m < n; ++m) {
    Rational next = (Rational(2 * m + 1) * x * cur - Rational(m) * prev) / Rational(m + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {cur, prev};
}

}  // namespace legsum
