#include <doctest.h>

#include <json.hpp>

#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "legsum/cli.hpp"

using namespace legsum;
using nlohmann::json;

namespace {

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("list shows the whole registry") {
  const CliRun r = run_cli({"list"});
  CHECK(r.exit_code == cli::kExitPass);
  CHECK(r.out.find("24 identities") != std::string::npos);
  CHECK(r.out.find("main_theorem") != std::string::npos);
}

TEST_CASE("list filter") {
  const CliRun r = run_cli({"list", "--filter", "gamma"});
  CHECK(r.exit_code == cli::kExitPass);
  CHECK(r.out.find("gamma_mu") != std::string::npos);
  CHECK(r.out.find("main_theorem") == std::string::npos);
}

TEST_CASE("list json") {
  const CliRun r = run_cli({"list", "--format", "json"});
  CHECK(r.exit_code == cli::kExitPass);
  const json entries = json::parse(r.out);
  CHECK(entries.is_array());
  CHECK(entries.size() == 24);
  CHECK(entries[0].contains("id"));
  CHECK(entries[0].contains("description"));
}

TEST_CASE("verify single identity as json") {
  const CliRun r = run_cli({"verify", "--id", "alternating_zero", "--n-max", "5",
                            "--format", "json"});
  CHECK(r.exit_code == cli::kExitPass);
  const json report = json::parse(r.out);
  CHECK(report["run"]["n_max"] == 5);
  CHECK(report["results"].size() == 5);
  for (const auto& entry : report["results"]) {
    CHECK(entry["identity_id"] == "alternating_zero");
    CHECK(entry["equal"] == true);
    CHECK(entry["lhs"] == "0");
    CHECK(entry["rhs"] == "0");
    CHECK(entry["micros"].is_number());
  }
  CHECK(report["summary"]["pass"] == 5);
  CHECK(report["summary"]["fail"] == 0);
  CHECK(report["summary"]["skipped"] == 1);  // n = 0 is below the guard

  // parsing and re-rendering the report yields identical content
  CHECK(json::parse(report.dump(2)).dump(2) == report.dump(2));
}

TEST_CASE("verify log_moment reports admissible (m, n) pairs only") {
  const CliRun r =
      run_cli({"verify", "--id", "log_moment", "--n-max", "4", "--format", "json"});
  CHECK(r.exit_code == cli::kExitPass);
  const json report = json::parse(r.out);
  std::set<std::pair<long, long>> seen;
  for (const auto& entry : report["results"]) {
    seen.insert({entry["params"]["m"].get<long>(), entry["n"].get<long>()});
  }
  const std::set<std::pair<long, long>> expected = {{0, 2}, {0, 3}, {1, 3},
                                                    {0, 4}, {1, 4}, {2, 4}};
  CHECK(seen == expected);
}

TEST_CASE("verify with explicit parameter grids") {
  const CliRun r = run_cli({"verify", "--id", "main_theorem", "--n-max", "8", "--x",
                            "0,1,-4,3/7", "--format", "json"});
  CHECK(r.exit_code == cli::kExitPass);
  const json report = json::parse(r.out);
  CHECK(report["results"].size() == 8 * 4);
  CHECK(report["summary"]["fail"] == 0);

  const CliRun rm = run_cli({"verify", "--id", "gamma_mu", "--n-max", "6", "--mu", "1/2,9/4"});
  CHECK(rm.exit_code == cli::kExitPass);
}

TEST_CASE("verify usage errors") {
  CHECK(run_cli({"verify", "--id", "nope"}).exit_code == cli::kExitUsage);
  CHECK(run_cli({"verify"}).exit_code == cli::kExitUsage);
  CHECK(run_cli({"verify", "--id", "main_theorem", "--x", "bogus"}).exit_code ==
        cli::kExitUsage);
  CHECK(run_cli({"bogus_command"}).exit_code == cli::kExitUsage);
}

TEST_CASE("verify table output mentions pass counts and seed") {
  const CliRun r = run_cli({"verify", "--id", "mu_half", "--n-max", "12", "--seed", "9"});
  CHECK(r.exit_code == cli::kExitPass);
  CHECK(r.out.find("mu_half") != std::string::npos);
  CHECK(r.out.find("seed 9") != std::string::npos);
  CHECK(r.out.find("0 failed") != std::string::npos);
}

TEST_CASE("verify across several workers") {
  const CliRun serial =
      run_cli({"verify", "--all", "--n-max", "12", "--format", "json", "--seed", "3"});
  const CliRun parallel = run_cli(
      {"verify", "--all", "--n-max", "12", "--format", "json", "--jobs", "4", "--seed", "3"});
  CHECK(serial.exit_code == cli::kExitPass);
  CHECK(parallel.exit_code == cli::kExitPass);
  json a = json::parse(serial.out);
  json b = json::parse(parallel.out);
  // identical apart from the wall-clock fields
  a["run"].erase("timestamp");
  b["run"].erase("timestamp");
  for (auto& entry : a["results"]) entry.erase("micros");
  for (auto& entry : b["results"]) entry.erase("micros");
  CHECK(a == b);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli({"--help"}).exit_code == cli::kExitPass);
  CHECK(run_cli({"verify", "--help"}).exit_code == cli::kExitPass);
}

TEST_CASE("selfcheck without the float grid") {
  const CliRun r = run_cli({"selfcheck", "--skip-float", "--seed", "42"});
  CHECK(r.exit_code == cli::kExitPass);
  CHECK(r.out.find("selfcheck passed") != std::string::npos);
  CHECK(r.out.find("float sanity grid") == std::string::npos);
  CHECK(r.out.find("seed 42") != std::string::npos);
}
