#include "legsum/gamma_ratio.hpp"

#include <stdexcept>

namespace legsum {

MuParameter::MuParameter(Rational value) : mu_(std::move(value)) {
  if (mu_.sign() <= 0) throw std::domain_error("mu must be positive");
}

Rational gamma_ratio(const MuParameter& mu, long n) {
  if (n < 0) throw std::domain_error("gamma_ratio requires n >= 0");
  const Rational numerator = pochhammer_rising(mu.value() - Rational(n), n);
  if (numerator.is_zero()) return Rational(0);
  return numerator / pochhammer_rising(mu.value(), n + 1);
}

Rational gamma_ratio_difference(const MuParameter& mu, long n) {
  if (n < 1) throw std::domain_error("gamma_ratio_difference requires n >= 1");
  const Rational sign(n % 2 == 0 ? 1 : -1);
  return sign / Rational(4 * n) * (gamma_ratio(mu, n) - gamma_ratio(mu, n - 1));
}

}  // namespace legsum
