#ifndef LEGSUM_CLI_HPP
#define LEGSUM_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "legsum/identities.hpp"

namespace legsum::cli {

// Exit code contract: 0 all pass, 1 at least one mismatch, 2 usage error,
// 3 internal error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

enum class OutputFormat { table, json };

struct RunConfig {
  std::vector<std::string> ids;  // empty with all=true means every identity
  bool all = false;
  long n_max = 60;
  ParamGrid grid = ParamGrid::defaults();
  OutputFormat format = OutputFormat::table;
  int jobs = 1;
  bool fail_fast = false;
};

int cmd_list(const std::string& filter, OutputFormat format, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_selfcheck(std::uint64_t seed, bool skip_float, std::ostream& out);

/// Parses argv-style arguments (program name excluded) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace legsum::cli

#endif  // LEGSUM_CLI_HPP
