#ifndef LEGSUM_INTEGRALS_HPP
#define LEGSUM_INTEGRALS_HPP

#include "legsum/polynomial.hpp"
#include "legsum/rational.hpp"

namespace legsum {

/// int_0^1 x^p ln(1/x) dx = 1/(p+1)^2 for p >= 0.
Rational power_log_moment(long p);

/// int_0^1 p(x) ln(1/x) dx by term-wise application of power_log_moment.
Rational poly_log_moment(const Polynomial& p);

/// int_0^1 x^m ln(1/x) P_n(2x-1) dx in closed form:
/// (-1)^(n-m) (m!)^2 (n-m-1)! / (n+m+1)!, valid for n > m >= 0.
Rational gautschi_value(long m, long n);

/// int_0^1 x^k arcsin(x) dx for odd k = 2n-1:
/// (pi/(4n)) (1 - 2^(-2n) C(2n, n)). Even k is rejected; the symmetric
/// pipeline never needs it. This closed form is the one analytic input of
/// the pi-linear layer; everything else is derived from it exactly.
PiLinear arcsin_power_moment(long k);

/// int_{-1}^{1} p(x) arcsin(x) dx: even powers vanish by symmetry, each odd
/// power x^k contributes 2 * coeff * arcsin_power_moment(k).
PiLinear arcsin_poly_moment(const Polynomial& p);

/// int_{-1}^{1} (1+x)^k arcsin(x) dx in closed form:
/// pi (2^k/(k+1) - 2^(-k) (2k+1) C(2k,k) / (k+1)^2).
PiLinear binom_arcsin_moment_closed(long k);

/// int_{-1}^{1} P_n(x) arcsin(x) dx: 0 for even n, and
/// pi ((n-2)!! / (2^((n+1)/2) ((n+1)/2)!))^2 for odd n (using (-1)!! = 1).
PiLinear legendre_arcsin_value(long n);

/// int_0^1 x^(2mu-1) P_n(2x^2-1) dx by term-wise integration of the
/// expanded polynomial: sum_j a_j / (j + 2mu) over monomials x^j. The
/// independent route against gamma_ratio(mu, n)/2.
Rational legendre_even_moment_termwise(const Rational& mu, long n);

}  // namespace legsum

#endif  // LEGSUM_INTEGRALS_HPP
