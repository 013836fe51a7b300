#pragma once

#include <string>

#include "mono/report.hpp"

namespace mono {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kIsotrivial = 3,
  kBudgetExceeded = 4,
  kPrecisionExhausted = 5,
  kInternal = 6,
};

struct RunConfig {
  std::string command;  // analyze | twist | kodaira | hyperell | quartic | selftest
  std::string input_path;
  std::string output_path;  // empty: stdout
  long precision_bits = 128;
  long max_cosets = 1'000'000;
  uint64_t seed = 0;
  bool quiet = false;
  std::string corpus_dir;  // selftest only
};

/// Executes one command. The report (or a machine-readable error document)
/// is returned through `out`; the exit code follows the error taxonomy.
/// Deterministic: identical (input, seed, precision, budget) give identical
/// documents.
int run(const RunConfig& config, Json* out);

/// Parses a family file into its report, dispatching on the command.
Json analyze_file(const RunConfig& config);

}  // namespace mono
