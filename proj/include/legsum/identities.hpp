#ifndef LEGSUM_IDENTITIES_HPP
#define LEGSUM_IDENTITIES_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "legsum/rational.hpp"

namespace legsum {

/// A requested case violates an identity's parameter guard. The message
/// names the violated condition.
class GuardError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class UnknownIdentityError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class ParamKind { none, x, mu, m };

std::string_view param_kind_name(ParamKind kind);

/// Entry of the closed identity registry. Each identity pairs a direct
/// exact summation (the oracle side) with an independent closed form.
struct IdentityDescriptor {
  std::string_view id;
  std::string_view description;
  ParamKind param = ParamKind::none;
  long n_claim_min = 1;  // smallest n for which equality is asserted
  long n_eval_min = 1;   // smallest n for which both sides are defined
  long sweep_cap = 0;    // 0 = uncapped; parameterized identities sweep n <= cap
};

/// The closed registry, in report order.
const std::vector<IdentityDescriptor>& registry_list();

/// nullptr when the id is not in the registry.
const IdentityDescriptor* find_identity(std::string_view id);

/// Throws UnknownIdentityError when the id is not in the registry.
const IdentityDescriptor& lookup_identity(std::string_view id);

struct IdentityCase {
  std::string identity_id;
  long n = 0;
  std::optional<Rational> x;
  std::optional<Rational> mu;
  std::optional<long> m;
};

/// Direct term-by-term exact summation of the identity's left-hand side.
/// No telescoping or closed-form shortcuts: this side is the oracle.
/// Guarded by the evaluation domain (both sides defined), not the claim.
Rational lhs_sum(const IdentityCase& c);

/// The identity's closed form, evaluated exactly.
Rational rhs_closed(const IdentityCase& c);

struct VerificationResult {
  IdentityCase input;
  Rational lhs;
  Rational rhs;
  bool equal = false;
  std::chrono::microseconds elapsed{0};
  std::string error;  // nonempty: evaluation failed (internal error)
};

/// Exact comparison of lhs_sum and rhs_closed. Throws GuardError when the
/// case lies outside the identity's claimed range.
VerificationResult verify_case(const IdentityCase& c);

/// Parameter grids used by sweeps. mu additionally includes mu = n and
/// mu = n+1 per case when the flags are set; m defaults to {0, 1, n-2}
/// plus one seeded random admissible value.
struct ParamGrid {
  std::vector<Rational> x_values;
  std::vector<Rational> mu_values;
  bool mu_include_n = true;
  bool mu_include_n_plus_1 = true;
  std::vector<long> m_values;  // empty = default scheme
  std::uint64_t seed = 1;

  static ParamGrid defaults();
};

struct SweepOutcome {
  std::vector<VerificationResult> results;  // deterministic (identity, n, param) order
  std::vector<IdentityCase> skipped;        // guard-excluded candidates
  bool stopped_early = false;               // fail-fast cut the sweep short
};

/// Verifies one identity over n in [n_lo, n_hi] crossed with the grid.
/// Guard-excluded candidates are recorded, never treated as failures.
/// Cases may be evaluated concurrently (jobs > 1); the result order does
/// not depend on the worker count. fail_fast forces serial evaluation and
/// stops after the first mismatch or error.
SweepOutcome verify_range(std::string_view id, long n_lo, long n_hi, const ParamGrid& grid,
                          int jobs = 1, bool fail_fast = false);

struct HelperCheck {
  bool ok = true;
  std::string first_failure;
};

/// Verifies the finite-sum helper identities used by the arcsin pipeline:
///  (a) the four equivalent binomial product forms,
///  (b) sum_j C(k,2j-1)/j = (2^(k+1)-2)/(k+1),
///  (c) sum_j C(m,j) C(m-j,j) 2^(m-2j) = C(2m,m),
///  (d) sum_j C(k,2j-1) (1/j) 2^(-2j) C(2j,j)
///        = -2/(k+1) + 2^(-k+1) (2k+1) C(2k,k)/(k+1)^2,
/// for all admissible indices up to k_max.
HelperCheck helper_identities_check(long k_max);

/// S_n = (-5/4)^n sum_k C(n,k)^2 5^-k, the partial-sum form of P_n(-3/2).
Rational s_value(long n);

/// Q_n = (-3/4)^n sum_k C(n,k)^2 (-1)^k 3^-k, the partial-sum form of P_n(-1/2).
Rational q_value(long n);

}  // namespace legsum

#endif  // LEGSUM_IDENTITIES_HPP
