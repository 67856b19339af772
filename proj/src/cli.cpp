#include "legsum/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "legsum/selfcheck.hpp"

namespace legsum::cli {

namespace {

using nlohmann::json;

std::string iso_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json params_to_json(const IdentityCase& c) {
  json params = json::object();
  if (c.x) params["x"] = c.x->str();
  if (c.mu) params["mu"] = c.mu->str();
  if (c.m) params["m"] = *c.m;
  return params;
}

std::string params_to_text(const IdentityCase& c) {
  std::ostringstream os;
  if (c.x) os << "x=" << c.x->str();
  if (c.mu) os << "mu=" << c.mu->str();
  if (c.m) os << "m=" << *c.m;
  return os.str();
}

struct IdentitySweep {
  const IdentityDescriptor* desc = nullptr;
  SweepOutcome outcome;
};

struct VerifyTotals {
  long pass = 0;
  long fail = 0;
  long skipped = 0;
  bool internal_error = false;
};

VerifyTotals tally(const std::vector<IdentitySweep>& sweeps) {
  VerifyTotals totals;
  for (const auto& sweep : sweeps) {
    totals.skipped += static_cast<long>(sweep.outcome.skipped.size());
    for (const auto& r : sweep.outcome.results) {
      if (!r.error.empty()) totals.internal_error = true;
      if (r.equal)
        ++totals.pass;
      else
        ++totals.fail;
    }
  }
  return totals;
}

void render_verify_table(const std::vector<IdentitySweep>& sweeps, const VerifyTotals& totals,
                         const RunConfig& config, double total_seconds, std::ostream& out) {
  out << std::left << std::setw(26) << "identity" << std::right << std::setw(8) << "cases"
      << std::setw(8) << "pass" << std::setw(8) << "fail" << std::setw(8) << "skip"
      << std::setw(12) << "time" << '\n';
  for (const auto& sweep : sweeps) {
    long pass = 0;
    long fail = 0;
    std::chrono::microseconds elapsed{0};
    for (const auto& r : sweep.outcome.results) {
      (r.equal ? pass : fail)++;
      elapsed += r.elapsed;
    }
    std::ostringstream time_col;
    time_col << std::fixed << std::setprecision(3) << elapsed.count() / 1e6 << "s";
    out << std::left << std::setw(26) << sweep.desc->id << std::right << std::setw(8)
        << sweep.outcome.results.size() << std::setw(8) << pass << std::setw(8) << fail
        << std::setw(8) << sweep.outcome.skipped.size() << std::setw(12) << time_col.str()
        << '\n';
    for (const auto& r : sweep.outcome.results) {
      if (r.equal) continue;
      if (!r.error.empty()) {
        out << "    error: n=" << r.input.n;
        if (const auto p = params_to_text(r.input); !p.empty()) out << ", " << p;
        out << ": " << r.error << '\n';
      } else {
        out << "    counterexample: n=" << r.input.n;
        if (const auto p = params_to_text(r.input); !p.empty()) out << ", " << p;
        out << ", lhs=" << r.lhs.str() << ", rhs=" << r.rhs.str() << '\n';
      }
    }
    if (sweep.outcome.stopped_early) out << "    stopped early (--fail-fast)\n";
  }
  out << sweeps.size() << " identities, " << (totals.pass + totals.fail) << " cases: "
      << totals.pass << " passed, " << totals.fail << " failed, " << totals.skipped
      << " guard-skipped (seed " << config.grid.seed << ", " << std::fixed
      << std::setprecision(2) << total_seconds << "s)\n";
}

json render_verify_json(const std::vector<IdentitySweep>& sweeps, const VerifyTotals& totals,
                        const RunConfig& config) {
  json results = json::array();
  for (const auto& sweep : sweeps) {
    for (const auto& r : sweep.outcome.results) {
      json entry = {
          {"identity_id", r.input.identity_id},
          {"params", params_to_json(r.input)},
          {"n", r.input.n},
          {"lhs", r.lhs.str()},
          {"rhs", r.rhs.str()},
          {"equal", r.equal},
          {"micros", r.elapsed.count()},
      };
      if (!r.error.empty()) entry["error"] = r.error;
      results.push_back(std::move(entry));
    }
  }
  return json{
      {"run",
       {{"seed", config.grid.seed}, {"n_max", config.n_max}, {"timestamp", iso_timestamp()}}},
      {"results", std::move(results)},
      {"summary", {{"pass", totals.pass}, {"fail", totals.fail}, {"skipped", totals.skipped}}},
  };
}

}  // namespace

int cmd_list(const std::string& filter, OutputFormat format, std::ostream& out) {
  std::vector<const IdentityDescriptor*> rows;
  for (const auto& desc : registry_list()) {
    if (!filter.empty() && std::string(desc.id).find(filter) == std::string::npos) continue;
    rows.push_back(&desc);
  }
  if (format == OutputFormat::json) {
    json entries = json::array();
    for (const auto* d : rows) {
      entries.push_back({{"id", d->id},
                         {"param", param_kind_name(d->param)},
                         {"n_min", d->n_claim_min},
                         {"sweep_cap", d->sweep_cap},
                         {"description", d->description}});
    }
    out << entries.dump(2) << '\n';
    return kExitPass;
  }
  out << std::left << std::setw(26) << "id" << std::setw(7) << "param" << std::setw(6) << "n>="
      << std::setw(9) << "sweep<=" << "description" << '\n';
  for (const auto* d : rows) {
    out << std::left << std::setw(26) << d->id << std::setw(7) << param_kind_name(d->param)
        << std::setw(6) << d->n_claim_min << std::setw(9)
        << (d->sweep_cap > 0 ? std::to_string(d->sweep_cap) : "-") << d->description << '\n';
  }
  out << rows.size() << " identities\n";
  return kExitPass;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  std::vector<std::string> ids;
  if (config.all) {
    for (const auto& desc : registry_list()) ids.emplace_back(desc.id);
  } else {
    ids = config.ids;
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  const auto start = std::chrono::steady_clock::now();
  std::vector<IdentitySweep> sweeps;
  sweeps.reserve(ids.size());
  for (const auto& id : ids) {
    IdentitySweep sweep;
    sweep.desc = &lookup_identity(id);
    sweep.outcome = verify_range(id, 0, config.n_max, config.grid, config.jobs, config.fail_fast);
    const bool failed = std::any_of(sweep.outcome.results.begin(), sweep.outcome.results.end(),
                                    [](const VerificationResult& r) { return !r.equal; });
    sweeps.push_back(std::move(sweep));
    if (config.fail_fast && failed) break;
  }
  const double total_seconds =
      std::chrono::duration_cast<std::chrono::duration<double>>(std::chrono::steady_clock::now() -
                                                                start)
          .count();

  const VerifyTotals totals = tally(sweeps);
  if (config.format == OutputFormat::json)
    out << render_verify_json(sweeps, totals, config).dump(2) << '\n';
  else
    render_verify_table(sweeps, totals, config, total_seconds, out);

  if (totals.internal_error) return kExitInternal;
  return totals.fail == 0 ? kExitPass : kExitMismatch;
}

int cmd_selfcheck(std::uint64_t seed, bool skip_float, std::ostream& out) {
  const auto reports = run_selfcheck({.seed = seed, .skip_float = skip_float});
  bool all_passed = true;
  for (const auto& r : reports) {
    out << (r.passed ? "[ ok ]" : "[FAIL]") << ' ' << r.name << " (" << r.cases << " checks, "
        << r.elapsed.count() << " ms)";
    if (!r.passed) {
      out << " -- " << r.detail;
      all_passed = false;
    }
    out << '\n';
  }
  out << (all_passed ? "selfcheck passed" : "selfcheck FAILED") << " (seed " << seed << ")\n";
  return all_passed ? kExitPass : kExitMismatch;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact verification of central-binomial / Legendre combinatorial identities"};
  app.require_subcommand(1);

  std::string filter;
  std::string list_format = "table";
  auto* list = app.add_subcommand("list", "show the identity registry");
  list->add_option("--filter", filter, "only ids containing this substring");
  list->add_option("--format", list_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  RunConfig config;
  std::string verify_format = "table";
  std::vector<std::string> x_values;
  std::vector<std::string> mu_values;
  std::vector<long> m_values;
  auto* verify = app.add_subcommand("verify", "verify identities exactly over an n sweep");
  verify->add_option("--id", config.ids, "identity id (repeatable)");
  verify->add_flag("--all", config.all, "verify every identity in the registry");
  verify->add_option("--n-max", config.n_max, "largest n to verify")
      ->check(CLI::Range(1L, 100000L));
  verify->add_option("--x", x_values, "override the x grid (rationals like 3/7)")
      ->delimiter(',');
  verify->add_option("--mu", mu_values, "override the mu grid (positive rationals)")
      ->delimiter(',');
  verify->add_option("--m", m_values, "override the m grid (integers)")->delimiter(',');
  verify->add_option("--format", verify_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  verify->add_option("--jobs", config.jobs, "worker threads")->check(CLI::Range(1, 256));
  verify->add_option("--seed", config.grid.seed, "seed for randomized grid entries");
  verify->add_flag("--fail-fast", config.fail_fast, "stop at the first mismatch");

  std::uint64_t selfcheck_seed = 1;
  bool skip_float = false;
  auto* selfcheck = app.add_subcommand("selfcheck", "run the library invariant suites");
  selfcheck->add_option("--seed", selfcheck_seed, "seed for randomized checks");
  selfcheck->add_flag("--skip-float", skip_float, "exact checks only");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("legsum");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (list->parsed())
      return cmd_list(filter, list_format == "json" ? OutputFormat::json : OutputFormat::table,
                      out);

    if (verify->parsed()) {
      if (!config.all && config.ids.empty()) {
        err << "verify: pass --all or at least one --id\n";
        return kExitUsage;
      }
      for (const auto& id : config.ids) {
        if (find_identity(id) == nullptr) {
          err << "unknown identity: " << id << " (see `legsum list`)\n";
          return kExitUsage;
        }
      }
      try {
        if (!x_values.empty()) {
          config.grid.x_values.clear();
          for (const auto& s : x_values) config.grid.x_values.push_back(Rational::from_string(s));
        }
        if (!mu_values.empty()) {
          config.grid.mu_values.clear();
          for (const auto& s : mu_values)
            config.grid.mu_values.push_back(Rational::from_string(s));
          config.grid.mu_include_n = false;
          config.grid.mu_include_n_plus_1 = false;
        }
        if (!m_values.empty()) config.grid.m_values = m_values;
      } catch (const std::exception& e) {
        err << "invalid parameter value: " << e.what() << '\n';
        return kExitUsage;
      }
      config.format = verify_format == "json" ? OutputFormat::json : OutputFormat::table;
      return cmd_verify(config, out);
    }

    return cmd_selfcheck(selfcheck_seed, skip_float, out);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace legsum::cli
