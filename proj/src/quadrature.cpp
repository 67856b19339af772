#include "legsum/quadrature.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "legsum/integrals.hpp"
#include "legsum/polynomial.hpp"

namespace legsum {

namespace {

struct QuadState {
  bool converged = true;
};

double simpson(double fa, double fm, double fb, double h) { return h / 6.0 * (fa + 4.0 * fm + fb); }

double adaptive_step(const std::function<double(double)>& f, double a, double b, double fa,
                     double fm, double fb, double whole, double tol, int depth, QuadState& state) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth <= 0) {
    state.converged = false;
    return left + right + delta / 15.0;
  }
  return adaptive_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1, state) +
         adaptive_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1, state);
}

struct QuadResult {
  double value = 0.0;
  bool converged = true;
};

QuadResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                            double tol, int max_depth = 48) {
  QuadState state;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = simpson(fa, fm, fb, b - a);
  const double value = adaptive_step(f, a, b, fa, fm, fb, whole, tol, max_depth, state);
  return {value, state.converged};
}

std::vector<double> double_coefficients(const Polynomial& p) {
  std::vector<double> c;
  c.reserve(p.coefficients().size());
  for (const auto& r : p.coefficients()) c.push_back(r.to_double());
  return c;
}

double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// The ln(1/x) endpoint singularity at x = 0 is removed by substituting
// x = exp(-t), which maps int_0^1 x^m ln(1/x) h(x) dx to
// int_0^inf t exp(-(m+1) t) h(exp(-t)) dt with a smooth integrand.
// Truncating at t = 40 discards at most sup|h| * 41 e^{-40} < 2e-16.
// The range is integrated in unit panels so the initial Simpson probes
// cannot miss the bump near t = 0 on an otherwise flat tail.
QuadResult log_moment_quadrature(long m, const std::function<double(double)>& h, double tol) {
  const int kTail = 40;
  auto integrand = [&](double t) {
    const double x = std::exp(-t);
    return t * std::exp(-(static_cast<double>(m) + 1.0) * t) * h(x);
  };
  QuadResult total;
  for (int j = 0; j < kTail; ++j) {
    const QuadResult panel = adaptive_simpson(integrand, j, j + 1, tol / kTail);
    total.value += panel.value;
    total.converged = total.converged && panel.converged;
  }
  return total;
}

// The arcsin factor has unbounded derivative at x = +-1; substituting
// x = sin(u) turns int g(x) arcsin(x) dx into int g(sin u) u cos(u) du,
// which is smooth on the closed interval, so no endpoint panels need
// special treatment.
QuadResult arcsin_quadrature(double lo, double hi, const std::function<double(double)>& g,
                             double tol) {
  return adaptive_simpson([&](double u) { return g(std::sin(u)) * u * std::cos(u); },
                          std::asin(lo), std::asin(hi), tol);
}

}  // namespace

std::string_view oracle_kind_name(OracleKind kind) {
  switch (kind) {
    case OracleKind::power_log: return "power_log";
    case OracleKind::gautschi: return "gautschi";
    case OracleKind::arcsin_power: return "arcsin_power";
    case OracleKind::binom_arcsin: return "binom_arcsin";
    case OracleKind::legendre_arcsin: return "legendre_arcsin";
  }
  return "unknown";
}

std::string FloatCheckResult::describe() const {
  std::ostringstream os;
  switch (status) {
    case FloatCheckStatus::pass: os << "pass"; break;
    case FloatCheckStatus::mismatch: os << "MISMATCH"; break;
    case FloatCheckStatus::no_convergence: os << "NO CONVERGENCE"; break;
  }
  os << " (exact " << exact << ", quadrature " << numeric << ", |err| " << abs_error << ")";
  return os.str();
}

FloatCheckResult float_sanity_check(OracleKind kind, const OracleParams& params, double tol) {
  const double inner_tol = tol * 1e-2;
  double exact = 0.0;
  QuadResult quad;

  switch (kind) {
    case OracleKind::power_log: {
      exact = power_log_moment(params.m).to_double();
      quad = log_moment_quadrature(params.m, [](double) { return 1.0; }, inner_tol);
      break;
    }
    case OracleKind::gautschi: {
      exact = gautschi_value(params.m, params.n).to_double();
      const auto shifted = double_coefficients(
          legendre_via_recursion(params.n).compose_linear(Rational(2), Rational(-1), 1));
      quad = log_moment_quadrature(params.m, [&](double x) { return horner(shifted, x); },
                                   inner_tol);
      break;
    }
    case OracleKind::arcsin_power: {
      exact = arcsin_power_moment(params.k).to_double();
      quad = arcsin_quadrature(0.0, 1.0,
                               [&](double x) { return std::pow(x, static_cast<double>(params.k)); },
                               inner_tol);
      break;
    }
    case OracleKind::binom_arcsin: {
      if (params.k < 0) throw std::domain_error("binom_arcsin requires k >= 0");
      exact = binom_arcsin_moment_closed(params.k).to_double();
      quad = arcsin_quadrature(
          -1.0, 1.0, [&](double x) { return std::pow(1.0 + x, static_cast<double>(params.k)); },
          inner_tol);
      break;
    }
    case OracleKind::legendre_arcsin: {
      exact = legendre_arcsin_value(params.n).to_double();
      const auto coeffs = double_coefficients(legendre_via_recursion(params.n));
      quad = arcsin_quadrature(-1.0, 1.0, [&](double x) { return horner(coeffs, x); }, inner_tol);
      break;
    }
  }

  FloatCheckResult result;
  result.exact = exact;
  result.numeric = quad.value;
  result.abs_error = std::abs(quad.value - exact);
  if (!quad.converged)
    result.status = FloatCheckStatus::no_convergence;
  else if (result.abs_error > tol)
    result.status = FloatCheckStatus::mismatch;
  else
    result.status = FloatCheckStatus::pass;
  return result;
}

}  // namespace legsum
