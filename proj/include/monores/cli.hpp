#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace monores {

enum class OutputFormat { table, json };

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  /// -1 selects the default derived from the ideal.
  int tmax = -1;
  int nmax = -1;
  int imax = -1;
  int tdeg = -1;
  std::uint64_t characteristic = 0;
  OutputFormat format = OutputFormat::table;
  bool check = false;
  bool transport = false;
  /// koszul: "R" (over S/I) or "S".
  std::string over = "R";
  unsigned jobs = 1;
};

enum ExitStatus : int { kExitOk = 0, kExitVerificationFailed = 1, kExitInputError = 2 };

const std::vector<std::string>& subcommands();

/// Runs one subcommand, writing the report to `out` and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace monores
