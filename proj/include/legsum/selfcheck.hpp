#ifndef LEGSUM_SELFCHECK_HPP
#define LEGSUM_SELFCHECK_HPP

#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "legsum/rational.hpp"

namespace legsum {

struct CheckReport {
  std::string name;
  bool passed = false;
  long cases = 0;
  std::string detail;  // first failure, or empty
  std::chrono::milliseconds elapsed{0};
};

/// Deterministic pseudo-random rational with small numerator/denominator.
Rational random_rational(std::mt19937_64& rng);

// Module-level invariant suites. Each returns one report; all exact except
// the float grid.

/// Field axioms, Pascal's rule, Pochhammer splitting, PiLinear componentwise
/// arithmetic, on seeded random samples.
CheckReport check_exact_arith_properties(std::uint64_t seed);

/// legendre_via_sum == legendre_via_recursion coefficient-wise, parity,
/// values at 0 and 1, and the three-term recursion residual, n <= n_max.
CheckReport check_legendre_cross_construction(long n_max);

/// generating_series coefficients match polynomial eval for each x sample.
CheckReport check_generating_series_matches_eval(long n_max, const std::vector<Rational>& xs);

/// integrate_interval(P_n P_m, -1, 1) == 0 for all 0 <= m < n <= n_max.
CheckReport check_orthogonality(long n_max);

/// extraction_sum == extraction_series_coeff for `sequences` seeded random
/// sequences and all 1 <= n <= n_max.
CheckReport check_extraction_identity(std::uint64_t seed, int sequences, long n_max);

/// With c_k = C(2k,k) 2^(-2k) (-x)^k the series side equals
/// P_n(-(x+2)/2) - P_{n-1}(-(x+2)/2), and inverse((1+z)^(2k+1)) reproduces
/// the alternating binomial expansion.
CheckReport check_extraction_legendre_chain(long n_max, const std::vector<Rational>& xs);

/// gautschi_value(m, n) == poly_log_moment(x^m P_n(2x-1)) for m < n <= n_max.
CheckReport check_gautschi_termwise(long n_max);

/// gamma_ratio(mu, n)/2 == term-wise moment of P_n(2x^2-1) for the rational
/// mu grid and all integer mu in 1..n+1, n <= n_max.
CheckReport check_legendre_even_moment(long n_max);

/// The arcsin pipeline: closed forms equal term-wise PiLinear integration,
/// the shifted unit integral vanishes, and the squared-central-binomial
/// identities re-derive from the integral route.
CheckReport check_arcsin_pipeline(long n_max);

/// helper_identities_check up to k_max.
CheckReport check_helper_identities(long k_max);

/// Float sanity grid over every oracle kind (n <= 8, m <= 3, k <= 8).
CheckReport check_float_grid();

struct SelfCheckOptions {
  std::uint64_t seed = 1;
  bool skip_float = false;
};

/// Runs every suite at its default size.
std::vector<CheckReport> run_selfcheck(const SelfCheckOptions& options);

}  // namespace legsum

#endif  // LEGSUM_SELFCHECK_HPP
