#ifndef LEGSUM_QUADRATURE_HPP
#define LEGSUM_QUADRATURE_HPP

#include <string>
#include <string_view>

namespace legsum {

/// Which exact integral oracle to check against floating-point quadrature.
enum class OracleKind {
  power_log,        // params: m (the power)
  gautschi,         // params: m, n
  arcsin_power,     // params: k (odd)
  binom_arcsin,     // params: k
  legendre_arcsin,  // params: n
};

std::string_view oracle_kind_name(OracleKind kind);

struct OracleParams {
  long n = 0;
  long m = 0;
  long k = 0;
};

enum class FloatCheckStatus { pass, mismatch, no_convergence };

/// Outcome of one quadrature-vs-oracle comparison. Non-convergence of the
/// quadrature is reported distinctly from a value mismatch.
struct FloatCheckResult {
  FloatCheckStatus status = FloatCheckStatus::pass;
  double exact = 0.0;
  double numeric = 0.0;
  double abs_error = 0.0;

  bool passed() const { return status == FloatCheckStatus::pass; }
  std::string describe() const;
};

/// Evaluates the named definite integral by adaptive Simpson quadrature and
/// compares against the exact oracle to absolute tolerance `tol`. This is
/// the only floating-point path in the library.
FloatCheckResult float_sanity_check(OracleKind kind, const OracleParams& params,
                                    double tol = 1e-10);

}  // namespace legsum

#endif  // LEGSUM_QUADRATURE_HPP
