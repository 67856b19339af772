#include "legsum/selfcheck.hpp"

#include <random>
#include <sstream>

#include "legsum/gamma_ratio.hpp"
#include "legsum/identities.hpp"
#include "legsum/integrals.hpp"
#include "legsum/polynomial.hpp"
#include "legsum/quadrature.hpp"
#include "legsum/series.hpp"

namespace legsum {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) : start_(std::chrono::steady_clock::now()) {
    report_.name = std::move(name);
    report_.passed = true;
  }

  template <typename... Parts>
  void expect(bool ok, const Parts&... parts) {
    ++report_.cases;
    if (ok || !report_.passed) return;
    std::ostringstream os;
    if constexpr (sizeof...(Parts) > 0) (os << ... << parts);
    report_.passed = false;
    report_.detail = os.str();
  }

  CheckReport finish() {
    report_.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start_);
    return report_;
  }

 private:
  CheckReport report_;
  std::chrono::steady_clock::time_point start_;
};

Rational cc(long n, long k) { return binomial(n + k, 2 * k) * binomial(2 * k, k); }

Rational sign_of(long k) { return Rational(k % 2 == 0 ? 1 : -1); }

}  // namespace

Rational random_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 199) - 99;
  const long den = static_cast<long>(rng() % 99) + 1;
  return Rational(num, den);
}

CheckReport check_exact_arith_properties(std::uint64_t seed) {
  Suite suite("exact arithmetic properties");
  std::mt19937_64 rng(seed);

  for (int i = 0; i < 200; ++i) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    const Rational c = random_rational(rng);
    suite.expect((a + b) + c == a + (b + c), "additive associativity at sample ", i);
    suite.expect((a * b) * c == a * (b * c), "multiplicative associativity at sample ", i);
    suite.expect(a * (b + c) == a * b + a * c, "distributivity at sample ", i);
    suite.expect(a + (-a) == Rational(0), "additive inverse at sample ", i);
    if (!a.is_zero()) suite.expect(a * (Rational(1) / a) == Rational(1), "reciprocal at sample ", i);
    suite.expect((a + b).denominator() > 0, "canonical denominator sign at sample ", i);
  }

  for (long n = 1; n <= 200; ++n) {
    for (long k = 1; k <= n; ++k) {
      if (binomial(n, k) != binomial(n - 1, k - 1) + binomial(n - 1, k)) {
        suite.expect(false, "Pascal's rule fails at n=", n, ", k=", k);
      }
    }
  }
  suite.expect(binomial(4, 2) == Rational(6), "C(4,2)");
  suite.expect(binomial(6, 3) == Rational(20), "C(6,3)");
  suite.expect(binomial(3, 5) == Rational(0), "out-of-range k convention");
  suite.expect(double_factorial(-1) == Rational(1), "(-1)!! convention");
  suite.expect(double_factorial(0) == Rational(1), "0!! convention");
  suite.expect(double_factorial(5) == Rational(15), "5!!");
  suite.expect(double_factorial(6) == Rational(48), "6!!");
  suite.expect(pochhammer_rising(Rational(1, 2), 3) == Rational(15, 8), "(1/2)_3");
  suite.expect(pochhammer_rising(Rational(-2), 4) == Rational(0), "(-2)_4 hits zero factor");

  for (int i = 0; i < 50; ++i) {
    const Rational x = random_rational(rng);
    const long m = static_cast<long>(rng() % 12);
    const long n = static_cast<long>(rng() % 12);
    suite.expect(pochhammer_rising(x, m + n) ==
                     pochhammer_rising(x, m) * pochhammer_rising(x + Rational(m), n),
                 "pochhammer splitting at sample ", i);
  }

  for (int i = 0; i < 50; ++i) {
    const PiLinear u(random_rational(rng), random_rational(rng));
    const PiLinear v(random_rational(rng), random_rational(rng));
    const Rational s = random_rational(rng);
    suite.expect((u + v).rational_part() == u.rational_part() + v.rational_part() &&
                     (u + v).pi_part() == u.pi_part() + v.pi_part(),
                 "componentwise addition at sample ", i);
    suite.expect((PiLinear(s) * u).pi_part() == s * u.pi_part(), "scaling at sample ", i);
    suite.expect((u == v) == (u.rational_part() == v.rational_part() &&
                              u.pi_part() == v.pi_part()),
                 "componentwise equality at sample ", i);
  }

  {
    bool threw = false;
    try {
      const PiLinear w = PiLinear::pi_times(Rational(1)) * PiLinear::pi_times(Rational(2));
      (void)w;
    } catch (const std::domain_error&) {
      threw = true;
    }
    suite.expect(threw, "pi*pi product must be rejected");
  }

  return suite.finish();
}

CheckReport check_legendre_cross_construction(long n_max) {
  Suite suite("legendre cross-construction");
  std::vector<Polynomial> recursion;
  recursion.reserve(n_max + 2);
  for (long n = 0; n <= n_max + 1; ++n) recursion.push_back(legendre_via_recursion(n));

  for (long n = 0; n <= n_max; ++n) {
    suite.expect(legendre_via_sum(n) == recursion[n], "sum vs recursion mismatch at n=", n);
    for (long i = 0; i <= n; ++i) {
      if ((n - i) % 2 != 0 && !recursion[n].coeff(i).is_zero())
        suite.expect(false, "parity violated at n=", n, ", coefficient ", i);
    }
  }

  for (long n = 1; n <= n_max; ++n) {
    const Polynomial residual = recursion[n + 1].scaled(Rational(n + 1)) -
                                recursion[n].times_x().scaled(Rational(2 * n + 1)) +
                                recursion[n - 1].scaled(Rational(n));
    suite.expect(residual.is_zero(), "recursion residual nonzero at n=", n);
  }

  for (long n = 0; n <= 100; ++n) {
    suite.expect(legendre_value(n, Rational(1)) == Rational(1), "P_n(1) != 1 at n=", n);
    suite.expect(legendre_value(n, Rational(-1)) == sign_of(n), "P_n(-1) parity at n=", n);
  }
  for (long n = 0; n <= 50; ++n) {
    suite.expect(legendre_value(2 * n + 1, Rational(0)) == Rational(0),
                 "odd value at zero, n=", n);
    suite.expect(legendre_value(2 * n, Rational(0)) ==
                     sign_of(n) * two_pow(-2 * n) * binomial(2 * n, n),
                 "even value at zero, n=", n);
  }

  return suite.finish();
}

CheckReport check_generating_series_matches_eval(long n_max, const std::vector<Rational>& xs) {
  Suite suite("generating series vs polynomial eval");
  for (const Rational& x : xs) {
    const Series series = generating_series(x, n_max);
    for (long n = 0; n <= n_max; ++n) {
      if (series.coeff(n) != legendre_via_recursion(n).eval(x))
        suite.expect(false, "coefficient mismatch at n=", n, ", x=", x.str());
      else
        suite.expect(true);
    }
  }
  return suite.finish();
}

CheckReport check_orthogonality(long n_max) {
  Suite suite("legendre orthogonality");
  std::vector<Polynomial> p;
  p.reserve(n_max + 1);
  for (long n = 0; n <= n_max; ++n) p.push_back(legendre_via_recursion(n));
  for (long n = 1; n <= n_max; ++n) {
    for (long m = 0; m < n; ++m) {
      const Rational integral = (p[n] * p[m]).integrate_interval(Rational(-1), Rational(1));
      suite.expect(integral.is_zero(), "nonzero product integral at n=", n, ", m=", m);
    }
  }
  return suite.finish();
}

CheckReport check_extraction_identity(std::uint64_t seed, int sequences, long n_max) {
  Suite suite("coefficient extraction identity");
  std::mt19937_64 rng(seed);
  for (int s = 0; s < sequences; ++s) {
    CoefficientSeq c(n_max + 1);
    for (auto& v : c) v = random_rational(rng);
    const auto series_side = extraction_series_all(c, n_max);
    for (long n = 1; n <= n_max; ++n) {
      if (extraction_sum(c, n) != series_side[n])
        suite.expect(false, "sum vs series mismatch, sequence ", s, ", n=", n);
      else
        suite.expect(true);
    }
  }
  return suite.finish();
}

CheckReport check_extraction_legendre_chain(long n_max, const std::vector<Rational>& xs) {
  Suite suite("extraction chain to legendre differences");

  // inverse((1+z)^(2k+1)) must reproduce the alternating binomial expansion.
  for (long k = 0; k <= 6; ++k) {
    const Series inv = Series::binomial_power(2 * k + 1, 12).inverse();
    for (long m = 0; m <= 12; ++m) {
      suite.expect(inv.coeff(m) == sign_of(m) * binomial(2 * k + m, 2 * k),
                   "inverse power expansion fails at k=", k, ", m=", m);
    }
  }

  for (const Rational& x : xs) {
    CoefficientSeq c(n_max + 1);
    for (long k = 0; k <= n_max; ++k)
      c[k] = binomial(2 * k, k) * two_pow(-2 * k) * pow(-x, k);
    const auto series_side = extraction_series_all(c, n_max);
    const Rational y = -(x + Rational(2)) / Rational(2);
    for (long n = 1; n <= n_max; ++n) {
      const auto [pn, pn1] = legendre_value_pair(n, y);
      suite.expect(series_side[n] == pn - pn1, "series side off at n=", n, ", x=", x.str());
      suite.expect(extraction_sum(c, n) == series_side[n],
                   "direct sum disagrees at n=", n, ", x=", x.str());
    }
  }
  return suite.finish();
}

CheckReport check_gautschi_termwise(long n_max) {
  Suite suite("gautschi closed form vs term-wise integration");
  for (long n = 1; n <= n_max; ++n) {
    const Polynomial shifted =
        legendre_via_recursion(n).compose_linear(Rational(2), Rational(-1), 1);
    Polynomial xm = Polynomial::constant(Rational(1));
    for (long m = 0; m < n; ++m) {
      suite.expect(gautschi_value(m, n) == poly_log_moment(xm * shifted),
                   "mismatch at m=", m, ", n=", n);
      xm = xm.times_x();
    }
  }
  return suite.finish();
}

CheckReport check_legendre_even_moment(long n_max) {
  Suite suite("gamma ratio vs term-wise moment of P_n(2x^2-1)");
  const std::vector<Rational> fixed = {Rational(1, 2), Rational(3, 2), Rational(7, 3),
                                       Rational(5)};
  for (long n = 0; n <= n_max; ++n) {
    const Polynomial composed =
        legendre_via_recursion(n).compose_linear(Rational(2), Rational(-1), 2);
    auto termwise = [&](const Rational& mu) {
      Rational sum(0);
      const auto& coeffs = composed.coefficients();
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (!coeffs[j].is_zero())
          sum += coeffs[j] / (Rational(static_cast<long>(j)) + Rational(2) * mu);
      }
      return sum;
    };
    std::vector<Rational> mus = fixed;
    for (long i = 1; i <= n + 1; ++i) mus.push_back(Rational(i));
    for (const Rational& mu : mus) {
      suite.expect(gamma_ratio(MuParameter(mu), n) == Rational(2) * termwise(mu),
                   "moment mismatch at n=", n, ", mu=", mu.str());
    }
  }
  return suite.finish();
}

CheckReport check_arcsin_pipeline(long n_max) {
  Suite suite("arcsin integral pipeline");

  // Closed form vs term-wise PiLinear integration of P_n itself.
  for (long n = 0; n <= n_max; ++n) {
    const Polynomial p = legendre_via_recursion(n);
    suite.expect(legendre_arcsin_value(n) == arcsin_poly_moment(p),
                 "P_n arcsin moment mismatch at n=", n);
  }

  // Closed form vs term-wise integration of (1+x)^k.
  Polynomial binom_pow = Polynomial::constant(Rational(1));
  const Polynomial one_plus_x({Rational(1), Rational(1)});
  for (long k = 0; k <= n_max; ++k) {
    suite.expect(binom_arcsin_moment_closed(k) == arcsin_poly_moment(binom_pow),
                 "(1+x)^k arcsin moment mismatch at k=", k);
    binom_pow = binom_pow * one_plus_x;
  }

  // The shifted polynomials integrate to zero over the unit interval.
  for (long n = 1; n <= n_max; ++n) {
    const Polynomial shifted =
        legendre_via_recursion(n).compose_linear(Rational(2), Rational(-1), 1);
    suite.expect(shifted.integrate_interval(Rational(0), Rational(1)).is_zero(),
                 "unit integral of shifted P_n nonzero at n=", n);
  }

  // The proof chain: summing the (1+x)^k moments against the binomial
  // weights reproduces the Legendre arcsin difference, and subtracting the
  // 1/(k+1) component recovers the registry closed forms.
  for (long nn = 1; nn <= n_max; ++nn) {
    PiLinear chain;
    Rational unit_sum(0);
    Rational squared_sum(0);
    for (long k = 0; k <= nn; ++k) {
      const Rational w = cc(nn, k) * sign_of(k) * two_pow(-k) / Rational(nn + k);
      chain = chain + PiLinear(w) * binom_arcsin_moment_closed(k);
      unit_sum += cc(nn, k) * sign_of(k) / (Rational(nn + k) * Rational(k + 1));
      const Rational d(k + 1);
      squared_sum += cc(nn, k) * binomial(2 * k, k) * two_pow(-2 * k) * Rational(2 * k + 1) *
                     sign_of(k) / (Rational(nn + k) * d * d);
    }
    const PiLinear target =
        PiLinear(sign_of(nn) / Rational(2 * nn)) *
        (legendre_arcsin_value(nn) - legendre_arcsin_value(nn - 1));
    suite.expect(chain == target, "proof chain mismatch at index ", nn);
    suite.expect(PiLinear::pi_times(unit_sum - squared_sum) == target,
                 "registry form of the chain mismatch at index ", nn);

    // Registry closed forms, reachable from the integral route.
    if (nn >= 2 && nn % 2 == 0) {
      const Rational rhs = rhs_closed({"arcsin_even", nn / 2, {}, {}, {}});
      suite.expect(PiLinear::pi_times(-rhs) == target, "even closed form at index ", nn);
    }
    if (nn >= 3 && nn % 2 == 1) {
      const Rational rhs = rhs_closed({"arcsin_odd", (nn - 1) / 2, {}, {}, {}});
      suite.expect(PiLinear::pi_times(-rhs) == target, "odd closed form at index ", nn);
    }
  }

  return suite.finish();
}

CheckReport check_helper_identities(long k_max) {
  Suite suite("finite-sum helper identities");
  const HelperCheck check = helper_identities_check(k_max);
  suite.expect(check.ok, check.first_failure);
  return suite.finish();
}

CheckReport check_float_grid() {
  Suite suite("float sanity grid");
  auto run = [&](OracleKind kind, const OracleParams& params) {
    const FloatCheckResult r = float_sanity_check(kind, params);
    suite.expect(r.passed(), oracle_kind_name(kind), " n=", params.n, " m=", params.m,
                 " k=", params.k, ": ", r.describe());
  };
  for (long m = 0; m <= 3; ++m) run(OracleKind::power_log, {.m = m});
  for (long m = 0; m <= 3; ++m) {
    for (long n = m + 1; n <= 8; ++n) run(OracleKind::gautschi, {.n = n, .m = m});
  }
  for (long k = 1; k <= 8; k += 2) run(OracleKind::arcsin_power, {.k = k});
  for (long k = 0; k <= 8; ++k) run(OracleKind::binom_arcsin, {.k = k});
  for (long n = 0; n <= 8; ++n) run(OracleKind::legendre_arcsin, {.n = n});
  return suite.finish();
}

std::vector<CheckReport> run_selfcheck(const SelfCheckOptions& options) {
  const std::vector<Rational> xs = {Rational(0),      Rational(1),     Rational(-1),
                                    Rational(1, 2),   Rational(-1, 2), Rational(-3, 2),
                                    Rational(3, 7)};
  std::vector<CheckReport> reports;
  reports.push_back(check_exact_arith_properties(options.seed));
  reports.push_back(check_legendre_cross_construction(40));
  reports.push_back(check_generating_series_matches_eval(40, xs));
  reports.push_back(check_orthogonality(30));
  reports.push_back(check_extraction_identity(options.seed, 200, 40));
  reports.push_back(check_extraction_legendre_chain(40, xs));
  reports.push_back(check_gautschi_termwise(40));
  reports.push_back(check_legendre_even_moment(40));
  reports.push_back(check_arcsin_pipeline(41));
  reports.push_back(check_helper_identities(60));
  if (!options.skip_float) reports.push_back(check_float_grid());
  return reports;
}

}  // namespace legsum
