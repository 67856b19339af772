#ifndef LEGSUM_GAMMA_RATIO_HPP
#define LEGSUM_GAMMA_RATIO_HPP

#include "legsum/rational.hpp"

namespace legsum {

/// Strictly positive rational parameter of the Gamma-ratio closed forms.
class MuParameter {
 public:
  explicit MuParameter(Rational value);
  const Rational& value() const { return mu_; }

 private:
  Rational mu_;
};

/// Gamma(mu)^2 / (Gamma(mu+n+1) Gamma(mu-n)) computed without evaluating
/// Gamma, as pochhammer(mu-n, n) / pochhammer(mu, n+1). For integer
/// mu <= n the rising product contains a zero factor, so the pole of
/// Gamma(mu-n) becomes an exact zero of the ratio.
Rational gamma_ratio(const MuParameter& mu, long n);

/// (-1)^n/(4n) * (gamma_ratio(mu, n) - gamma_ratio(mu, n-1)); the closed
/// form matched by the 1/((n+k)(2k+2mu))-weighted binomial sum. n >= 1.
Rational gamma_ratio_difference(const MuParameter& mu, long n);

}  // namespace legsum

#endif  // LEGSUM_GAMMA_RATIO_HPP
