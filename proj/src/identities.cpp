#include "legsum/identities.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "legsum/gamma_ratio.hpp"
#include "legsum/polynomial.hpp"

namespace legsum {

namespace {

enum class Id {
  main_theorem,
  main_transformed,
  sn_closed,
  qn_closed,
  alternating_zero,
  p0_even,
  p0_odd,
  int_unit,
  int_unit_k,
  gamma_mu,
  mu_half,
  mu_three_half,
  mu_n,
  mu_n_plus_1,
  combo_k_2k1,
  combo_k1_2k3,
  combo_squared,
  log_moment,
  log_m0,
  log_m1,
  log_m_n2,
  arcsin_even,
  arcsin_odd,
  helper_binom_equalities,
};

struct RegistryEntry {
  Id which;
  IdentityDescriptor desc;
};

// The closed registry. Parameterized identities sweep n up to 60 by
// default; parameter-free ones follow the requested n range.
const std::vector<RegistryEntry>& registry_entries() {
  static const std::vector<RegistryEntry> entries = {
      {Id::main_theorem,
       {"main_theorem",
        "x^k-weighted central binomial sum equals a Legendre difference at -(x+2)/2", ParamKind::x,
        1, 1, 60}},
      {Id::main_transformed,
       {"main_transformed",
        "after x -> -4x: alternating sum equals a shifted-Legendre difference at 2x-1",
        ParamKind::x, 1, 1, 60}},
      {Id::sn_closed,
       {"sn_closed", "x=1 specialization through the partial-sum form of P_n(-3/2)",
        ParamKind::none, 1, 1, 0}},
      {Id::qn_closed,
       {"qn_closed", "alternating specialization through the partial-sum form of P_n(-1/2)",
        ParamKind::none, 1, 1, 0}},
      {Id::alternating_zero,
       {"alternating_zero", "alternating central binomial sum vanishes (P_n(1) = 1)",
        ParamKind::none, 1, 1, 0}},
      {Id::p0_even,
       {"p0_even", "even-index specialization through P_{2n}(0)", ParamKind::none, 1, 1, 0}},
      {Id::p0_odd,
       {"p0_odd", "odd-index specialization through P_{2n+1}(0) = 0", ParamKind::none, 0, 0, 0}},
      {Id::int_unit,
       {"int_unit", "weight 1/(k+1) from integrating the shifted identity over [0,1]",
        ParamKind::none, 1, 1, 0}},
      {Id::int_unit_k,
       {"int_unit_k", "weight k/(k+1) companion of int_unit", ParamKind::none, 1, 1, 0}},
      {Id::gamma_mu,
       {"gamma_mu", "weight 1/(2k+2mu) equals a Gamma-ratio difference in Pochhammer form",
        ParamKind::mu, 1, 1, 60}},
      {Id::mu_half,
       {"mu_half", "mu = 1/2 case: weight 1/(2k+1)", ParamKind::none, 1, 1, 0}},
      {Id::mu_three_half,
       {"mu_three_half", "mu = 3/2 case: weight 1/(2k+3)", ParamKind::none, 1, 1, 0}},
      {Id::mu_n, {"mu_n", "mu = n case: weight 1/(n+k)^2", ParamKind::none, 1, 1, 0}},
      {Id::mu_n_plus_1,
       {"mu_n_plus_1", "mu = n+1 case: weight 1/((n+k)(n+1+k))", ParamKind::none, 1, 1, 0}},
      {Id::combo_k_2k1,
       {"combo_k_2k1", "combination with weight k/(2k+1)", ParamKind::none, 1, 1, 0}},
      {Id::combo_k1_2k3,
       {"combo_k1_2k3", "combination with weight (k+1)/(2k+3)", ParamKind::none, 1, 1, 0}},
      {Id::combo_squared,
       {"combo_squared", "combined mu = n and mu = n+1 cases: weight 1/((n+k)^2(n+1+k))",
        ParamKind::none, 1, 1, 0}},
      {Id::log_moment,
       {"log_moment", "weight 1/(m+k+1)^2 from the x^m log(1/x) moment", ParamKind::m, 2, 2, 60}},
      {Id::log_m0, {"log_m0", "m = 0 log-moment case with an n = 1 split", ParamKind::none, 1, 1, 0}},
      {Id::log_m1,
       {"log_m1", "m = 1 log-moment case with n = 1, 2 splits", ParamKind::none, 1, 1, 0}},
      {Id::log_m_n2,
       {"log_m_n2", "m = n-2 log-moment case in central-binomial form", ParamKind::none, 2, 2, 0}},
      {Id::arcsin_even,
       {"arcsin_even", "squared central binomial sum (even index) from arcsin moments",
        ParamKind::none, 1, 1, 0}},
      {Id::arcsin_odd,
       {"arcsin_odd", "squared central binomial sum (odd index) from arcsin moments",
        ParamKind::none, 1, 0, 0}},
      {Id::helper_binom_equalities,
       {"helper_binom_equalities", "two of the four equivalent binomial product forms, summed",
        ParamKind::none, 1, 1, 0}},
  };
  return entries;
}

const RegistryEntry* find_entry(std::string_view id) {
  for (const auto& entry : registry_entries()) {
    if (entry.desc.id == id) return &entry;
  }
  return nullptr;
}

const RegistryEntry& require_entry(const std::string& id) {
  const RegistryEntry* entry = find_entry(id);
  if (entry == nullptr) throw UnknownIdentityError("unknown identity: " + id);
  return *entry;
}

Rational sign_of(long k) { return Rational(k % 2 == 0 ? 1 : -1); }

// C(n+k, 2k) C(2k, k), the summand core common to the whole family.
Rational cc(long n, long k) { return binomial(n + k, 2 * k) * binomial(2 * k, k); }

[[noreturn]] void guard_fail(const std::string& id, const std::string& condition) {
  throw GuardError(id + ": guard violated: " + condition);
}

void require_param(const IdentityCase& c, ParamKind kind) {
  switch (kind) {
    case ParamKind::none: return;
    case ParamKind::x:
      if (!c.x) guard_fail(c.identity_id, "parameter x required");
      return;
    case ParamKind::mu:
      if (!c.mu) guard_fail(c.identity_id, "parameter mu required");
      if (c.mu->sign() <= 0) guard_fail(c.identity_id, "mu > 0 required");
      return;
    case ParamKind::m:
      if (!c.m) guard_fail(c.identity_id, "parameter m required");
      if (*c.m < 0) guard_fail(c.identity_id, "m >= 0 required");
      if (*c.m >= c.n - 1) guard_fail(c.identity_id, "m < n - 1 required");
      return;
  }
}

void check_eval_guards(const RegistryEntry& entry, const IdentityCase& c) {
  if (c.n < entry.desc.n_eval_min) {
    std::ostringstream os;
    os << "n >= " << entry.desc.n_eval_min << " required";
    guard_fail(c.identity_id, os.str());
  }
  require_param(c, entry.desc.param);
}

// Weighted sum over k = 0..top of cc(n, k) * weight(k).
template <typename Weight>
Rational summed(long n, long top, Weight&& weight) {
  Rational sum(0);
  for (long k = 0; k <= top; ++k) sum += cc(n, k) * weight(k);
  return sum;
}

Rational lhs_dispatch(Id which, const IdentityCase& c) {
  const long n = c.n;
  switch (which) {
    case Id::main_theorem: {
      const Rational w = *c.x / Rational(4);
      Rational wk(1), sum(0);
      for (long k = 0; k <= n; ++k) {
        sum += cc(n, k) * wk / Rational(n + k);
        wk *= w;
      }
      return sum;
    }
    case Id::main_transformed: {
      const Rational w = -*c.x;
      Rational wk(1), sum(0);
      for (long k = 0; k <= n; ++k) {
        sum += cc(n, k) * wk / Rational(n + k);
        wk *= w;
      }
      return sum;
    }
    case Id::sn_closed:
      return summed(n, n, [&](long k) { return two_pow(-2 * k) / Rational(n + k); });
    case Id::qn_closed:
      return summed(n, n,
                    [&](long k) { return sign_of(k) * two_pow(-2 * k) / Rational(n + k); });
    case Id::alternating_zero:
      return summed(n, n, [&](long k) { return sign_of(k) / Rational(n + k); });
    case Id::p0_even: {
      const long nn = 2 * n;
      return summed(nn, nn,
                    [&](long k) { return sign_of(k) * two_pow(-k) / Rational(nn + k); });
    }
    case Id::p0_odd: {
      const long nn = 2 * n + 1;
      return summed(nn, nn,
                    [&](long k) { return sign_of(k) * two_pow(-k) / Rational(nn + k); });
    }
    case Id::int_unit:
      return summed(n, n,
                    [&](long k) { return sign_of(k) / (Rational(n + k) * Rational(k + 1)); });
    case Id::int_unit_k:
      return summed(n, n, [&](long k) {
        return sign_of(k) * Rational(k) / (Rational(n + k) * Rational(k + 1));
      });
    case Id::gamma_mu: {
      const Rational& mu = *c.mu;
      return summed(n, n, [&](long k) {
        return sign_of(k) / (Rational(n + k) * (Rational(2 * k) + Rational(2) * mu));
      });
    }
    case Id::mu_half:
      return summed(n, n,
                    [&](long k) { return sign_of(k) / (Rational(n + k) * Rational(2 * k + 1)); });
    case Id::mu_three_half:
      return summed(n, n,
                    [&](long k) { return sign_of(k) / (Rational(n + k) * Rational(2 * k + 3)); });
    case Id::mu_n:
      return summed(n, n,
                    [&](long k) { return sign_of(k) / (Rational(n + k) * Rational(n + k)); });
    case Id::mu_n_plus_1:
      return summed(n, n, [&](long k) {
        return sign_of(k) / (Rational(n + k) * Rational(n + 1 + k));
      });
    case Id::combo_k_2k1:
      return summed(n, n, [&](long k) {
        return sign_of(k + 1) * Rational(k) / (Rational(n + k) * Rational(2 * k + 1));
      });
    case Id::combo_k1_2k3:
      return summed(n, n, [&](long k) {
        return sign_of(k) * Rational(k + 1) / (Rational(n + k) * Rational(2 * k + 3));
      });
    case Id::combo_squared:
      return summed(n, n, [&](long k) {
        return sign_of(k) / (Rational(n + k) * Rational(n + k) * Rational(n + 1 + k));
      });
    case Id::log_moment: {
      const long m = *c.m;
      return summed(n, n, [&](long k) {
        const Rational d(m + k + 1);
        return sign_of(k) / (Rational(n + k) * d * d);
      });
    }
    case Id::log_m0:
      return summed(n, n, [&](long k) {
        const Rational d(k + 1);
        return sign_of(k) / (Rational(n + k) * d * d);
      });
    case Id::log_m1:
      return summed(n, n, [&](long k) {
        const Rational d(k + 2);
        return sign_of(k + 1) / (Rational(n + k) * d * d);
      });
    case Id::log_m_n2:
      return summed(n, n, [&](long k) {
        const Rational d(n - 1 + k);
        return sign_of(k) / (Rational(n + k) * d * d);
      });
    case Id::arcsin_even: {
      const long nn = 2 * n;
      return summed(nn, nn, [&](long k) {
        const Rational d(k + 1);
        return binomial(2 * k, k) * two_pow(-2 * k) * Rational(2 * k + 1) * sign_of(k) /
               (Rational(nn + k) * d * d);
      });
    }
    case Id::arcsin_odd: {
      const long nn = 2 * n + 1;
      return summed(nn, nn, [&](long k) {
        const Rational d(k + 1);
        return binomial(2 * k, k) * two_pow(-2 * k) * Rational(2 * k + 1) * sign_of(k) /
               (Rational(nn + k) * d * d);
      });
    }
    case Id::helper_binom_equalities: {
      Rational sum(0);
      for (long k = 0; k <= n; ++k) sum += binomial(n + k, k) * binomial(n, k);
      return sum;
    }
  }
  throw std::logic_error("unhandled identity in lhs_sum");
}

Rational rhs_dispatch(Id which, const IdentityCase& c) {
  const long n = c.n;
  switch (which) {
    case Id::main_theorem: {
      const Rational y = -(*c.x + Rational(2)) / Rational(2);
      const auto [pn, pn1] = legendre_value_pair(n, y);
      return sign_of(n) * (pn - pn1) / Rational(2 * n);
    }
    case Id::main_transformed: {
      const Rational y = Rational(2) * *c.x - Rational(1);
      const auto [pn, pn1] = legendre_value_pair(n, y);
      return sign_of(n) * (pn - pn1) / Rational(2 * n);
    }
    case Id::sn_closed:
      return sign_of(n) * (s_value(n) - s_value(n - 1)) / Rational(2 * n);
    case Id::qn_closed:
      return sign_of(n) * (q_value(n) - q_value(n - 1)) / Rational(2 * n);
    case Id::alternating_zero:
      return Rational(0);
    case Id::p0_even:
      return sign_of(n) * two_pow(-2 * n) * binomial(2 * n, n) / Rational(4 * n);
    case Id::p0_odd:
      return sign_of(n) * two_pow(-2 * n) * binomial(2 * n, n) / Rational(2 * (2 * n + 1));
    case Id::int_unit:
      return n == 1 ? Rational(1, 2) : Rational(0);
    case Id::int_unit_k:
      return n == 1 ? Rational(-1, 2) : Rational(0);
    case Id::gamma_mu:
      return gamma_ratio_difference(MuParameter(*c.mu), n);
    case Id::mu_half:
      return Rational(2) / (Rational(2 * n - 1) * Rational(2 * n + 1));
    case Id::mu_three_half:
      return Rational(-2) / (Rational(2 * n - 3) * Rational(2 * n - 1) * Rational(2 * n + 1) *
                             Rational(2 * n + 3));
    case Id::mu_n:
      return sign_of(n + 1) / (Rational(n) * Rational(n) * binomial(2 * n, n));
    case Id::mu_n_plus_1:
      return sign_of(n + 1) / (Rational(2 * n + 1) * binomial(2 * n, n));
    case Id::combo_k_2k1:
      return Rational(1) / (Rational(2 * n - 1) * Rational(2 * n + 1));
    case Id::combo_k1_2k3:
      return Rational(1) / (Rational(2 * n - 3) * Rational(2 * n - 1) * Rational(2 * n + 1) *
                            Rational(2 * n + 3));
    case Id::combo_squared:
      return sign_of(n) * (Rational(n) * Rational(n) - Rational(2 * n) - Rational(1)) /
             (Rational(n) * Rational(n) * Rational(2 * n + 1) * binomial(2 * n, n));
    case Id::log_moment: {
      const long m = *c.m;
      return sign_of(m) * factorial(m) * factorial(m) * factorial(n - m - 2) /
             factorial(n + m + 1);
    }
    case Id::log_m0:
      if (n == 1) return Rational(3, 4);
      return Rational(1) / (Rational(n - 1) * Rational(n) * Rational(n + 1));
    case Id::log_m1:
      if (n == 1) return Rational(-5, 36);
      if (n == 2) return Rational(1, 288);
      return Rational(1) / (Rational(n - 2) * Rational(n - 1) * Rational(n) * Rational(n + 1) *
                            Rational(n + 2));
    case Id::log_m_n2:
      return sign_of(n) * Rational(2) /
             (Rational(n - 1) * Rational(n - 1) * Rational(n) * binomial(2 * n, n));
    case Id::arcsin_even: {
      const Rational central = binomial(2 * (n - 1), n - 1);
      return two_pow(-4 * n) * central * central / (Rational(n) * Rational(n) * Rational(n));
    }
    case Id::arcsin_odd: {
      const Rational central = binomial(2 * n, n);
      return two_pow(-(4 * n + 3)) * central * central /
             (Rational(2 * n + 1) * Rational(n + 1) * Rational(n + 1));
    }
    case Id::helper_binom_equalities: {
      Rational sum(0);
      for (long k = 0; k <= n; ++k) sum += cc(n, k);
      return sum;
    }
  }
  throw std::logic_error("unhandled identity in rhs_closed");
}

VerificationResult evaluate_case(const RegistryEntry& entry, const IdentityCase& c) {
  VerificationResult result;
  result.input = c;
  const auto start = std::chrono::steady_clock::now();
  try {
    check_eval_guards(entry, c);
    result.lhs = lhs_dispatch(entry.which, c);
    result.rhs = rhs_dispatch(entry.which, c);
    result.equal = (result.lhs == result.rhs);
  } catch (const std::exception& e) {
    result.error = e.what();
    result.equal = false;
  }
  result.elapsed =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  return result;
}

std::vector<long> m_grid_for(const ParamGrid& grid, long n, std::uint64_t seed) {
  std::vector<long> ms;
  if (!grid.m_values.empty()) {
    ms = grid.m_values;
  } else {
    ms = {0, 1, n - 2};
    // One extra seeded admissible m per n keeps sweeps from getting stuck
    // on the same three columns.
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(n));
    if (n >= 3) ms.push_back(static_cast<long>(rng() % static_cast<std::uint64_t>(n - 1)));
  }
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  return ms;
}

}  // namespace

std::string_view param_kind_name(ParamKind kind) {
  switch (kind) {
    case ParamKind::none: return "-";
    case ParamKind::x: return "x";
    case ParamKind::mu: return "mu";
    case ParamKind::m: return "m";
  }
  return "?";
}

const std::vector<IdentityDescriptor>& registry_list() {
  static const std::vector<IdentityDescriptor> descriptors = [] {
    std::vector<IdentityDescriptor> d;
    d.reserve(registry_entries().size());
    for (const auto& entry : registry_entries()) d.push_back(entry.desc);
    return d;
  }();
  return descriptors;
}

const IdentityDescriptor* find_identity(std::string_view id) {
  const RegistryEntry* entry = find_entry(id);
  return entry ? &entry->desc : nullptr;
}

const IdentityDescriptor& lookup_identity(std::string_view id) {
  return require_entry(std::string(id)).desc;
}

Rational lhs_sum(const IdentityCase& c) {
  const RegistryEntry& entry = require_entry(c.identity_id);
  check_eval_guards(entry, c);
  return lhs_dispatch(entry.which, c);
}

Rational rhs_closed(const IdentityCase& c) {
  const RegistryEntry& entry = require_entry(c.identity_id);
  check_eval_guards(entry, c);
  return rhs_dispatch(entry.which, c);
}

VerificationResult verify_case(const IdentityCase& c) {
  const RegistryEntry& entry = require_entry(c.identity_id);
  if (c.n < entry.desc.n_claim_min) {
    std::ostringstream os;
    os << "identity asserted for n >= " << entry.desc.n_claim_min << " only";
    guard_fail(c.identity_id, os.str());
  }
  check_eval_guards(entry, c);
  return evaluate_case(entry, c);
}

ParamGrid ParamGrid::defaults() {
  ParamGrid grid;
  grid.x_values = {Rational(0),     Rational(1),  Rational(-1), Rational(1, 2), Rational(-1, 2),
                   Rational(2),     Rational(-2), Rational(-4), Rational(3, 7)};
  grid.mu_values = {Rational(1, 2), Rational(3, 2), Rational(7, 3), Rational(5)};
  return grid;
}

SweepOutcome verify_range(std::string_view id, long n_lo, long n_hi, const ParamGrid& grid,
                          int jobs, bool fail_fast) {
  const RegistryEntry& entry = require_entry(std::string(id));
  const IdentityDescriptor& desc = entry.desc;

  SweepOutcome outcome;
  std::vector<IdentityCase> cases;

  long hi = n_hi;
  if (desc.sweep_cap > 0) hi = std::min(hi, desc.sweep_cap);

  for (long n = std::max(n_lo, 0L); n <= hi; ++n) {
    IdentityCase base;
    base.identity_id = std::string(desc.id);
    base.n = n;
    if (n < desc.n_claim_min) {
      outcome.skipped.push_back(base);
      continue;
    }
    switch (desc.param) {
      case ParamKind::none:
        cases.push_back(base);
        break;
      case ParamKind::x:
        for (const Rational& x : grid.x_values) {
          IdentityCase c = base;
          c.x = x;
          cases.push_back(std::move(c));
        }
        break;
      case ParamKind::mu: {
        std::vector<Rational> mus = grid.mu_values;
        if (grid.mu_include_n) mus.push_back(Rational(n));
        if (grid.mu_include_n_plus_1) mus.push_back(Rational(n + 1));
        std::sort(mus.begin(), mus.end());
        mus.erase(std::unique(mus.begin(), mus.end()), mus.end());
        for (const Rational& mu : mus) {
          IdentityCase c = base;
          c.mu = mu;
          if (mu.sign() <= 0) {
            outcome.skipped.push_back(c);
            continue;
          }
          cases.push_back(std::move(c));
        }
        break;
      }
      case ParamKind::m:
        for (long m : m_grid_for(grid, n, grid.seed)) {
          IdentityCase c = base;
          c.m = m;
          if (m < 0 || m >= n - 1) {
            outcome.skipped.push_back(c);
            continue;
          }
          cases.push_back(std::move(c));
        }
        break;
    }
  }

  outcome.results.resize(cases.size());

  if (fail_fast || jobs <= 1 || cases.size() < 2) {
    // Serial; fail-fast stops after the first mismatch or error.
    std::size_t done = 0;
    for (; done < cases.size(); ++done) {
      outcome.results[done] = evaluate_case(entry, cases[done]);
      if (fail_fast && (!outcome.results[done].equal || !outcome.results[done].error.empty())) {
        ++done;
        outcome.stopped_early = done < cases.size();
        break;
      }
    }
    outcome.results.resize(done);
    return outcome;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cases.size()) return;
      outcome.results[i] = evaluate_case(entry, cases[i]);
    }
  };
  std::vector<std::thread> pool;
  const int thread_count = std::min<int>(jobs, static_cast<int>(cases.size()));
  pool.reserve(thread_count);
  for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return outcome;
}

HelperCheck helper_identities_check(long k_max) {
  if (k_max < 1) throw std::invalid_argument("helper_identities_check requires k_max >= 1");
  HelperCheck check;
  auto fail = [&](const std::string& what) {
    if (check.ok) {
      check.ok = false;
      check.first_failure = what;
    }
  };

  // (a) C(n+k,k)C(n,k) = C(n+k,n)C(n,n-k) = C(n+k,n-k)C(2k,k) = C(n+k,2k)C(2k,k).
  for (long n = 0; n <= k_max && check.ok; ++n) {
    for (long k = 0; k <= n; ++k) {
      const Rational f1 = binomial(n + k, k) * binomial(n, k);
      const Rational f2 = binomial(n + k, n) * binomial(n, n - k);
      const Rational f3 = binomial(n + k, n - k) * binomial(2 * k, k);
      const Rational f4 = binomial(n + k, 2 * k) * binomial(2 * k, k);
      if (!(f1 == f2 && f2 == f3 && f3 == f4)) {
        std::ostringstream os;
        os << "binomial product forms disagree at n=" << n << ", k=" << k;
        fail(os.str());
        break;
      }
    }
  }

  // (b) sum_j C(k, 2j-1)/j = (2^(k+1) - 2)/(k+1).
  for (long k = 1; k <= k_max && check.ok; ++k) {
    Rational sum(0);
    for (long j = 1; 2 * j - 1 <= k; ++j) sum += binomial(k, 2 * j - 1) / Rational(j);
    const Rational rhs = (two_pow(k + 1) - Rational(2)) / Rational(k + 1);
    if (sum != rhs) {
      std::ostringstream os;
      os << "odd-harmonic helper fails at k=" << k;
      fail(os.str());
    }
  }

  // (c) sum_j C(m,j) C(m-j,j) 2^(m-2j) = C(2m,m).
  for (long m = 0; m <= k_max && check.ok; ++m) {
    Rational sum(0);
    for (long j = 0; 2 * j <= m; ++j)
      sum += binomial(m, j) * binomial(m - j, j) * two_pow(m - 2 * j);
    if (sum != binomial(2 * m, m)) {
      std::ostringstream os;
      os << "split central-binomial helper fails at m=" << m;
      fail(os.str());
    }
  }

  // (d) sum_j C(k,2j-1) (1/j) 2^(-2j) C(2j,j)
  //       = -2/(k+1) + 2^(-k+1) (2k+1) C(2k,k)/(k+1)^2.
  for (long k = 1; k <= k_max && check.ok; ++k) {
    Rational sum(0);
    for (long j = 1; 2 * j - 1 <= k; ++j)
      sum += binomial(k, 2 * j - 1) * two_pow(-2 * j) * binomial(2 * j, j) / Rational(j);
    const Rational k1(k + 1);
    const Rational rhs =
        Rational(-2) / k1 + two_pow(-k + 1) * Rational(2 * k + 1) * binomial(2 * k, k) / (k1 * k1);
    if (sum != rhs) {
      std::ostringstream os;
      os << "weighted central-binomial helper fails at k=" << k;
      fail(os.str());
    }
  }

  return check;
}

Rational s_value(long n) {
  if (n < 0) throw std::domain_error("s_value requires n >= 0");
  Rational sum(0);
  for (long k = 0; k <= n; ++k) sum += binomial(n, k) * binomial(n, k) * pow(Rational(1, 5), k);
  return pow(Rational(-5, 4), n) * sum;
}

Rational q_value(long n) {
  if (n < 0) throw std::domain_error("q_value requires n >= 0");
  Rational sum(0);
  for (long k = 0; k <= n; ++k)
    sum += binomial(n, k) * binomial(n, k) * pow(Rational(-1, 3), k);
  return pow(Rational(-3, 4), n) * sum;
}

}  // namespace legsum
