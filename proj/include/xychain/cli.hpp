#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "xychain/sweep.hpp"

namespace xychain::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitFailure = 1;  // numerical or validation failure
inline constexpr int kExitUsage = 2;

enum class Command { Sweep, Crossings, Factorization, Validate };

struct Invocation {
  Command command = Command::Sweep;
  SweepConfig sweep;
  CrossingSearch crossings;
  bool report = false;  // sweep: also locate crossings and print a minima report
};

struct ParseResult {
  std::optional<Invocation> invocation;  // empty when the caller should exit
  int exit_code = kExitSuccess;
  std::string message;  // help or error text
};

/// Parses `args` (without the program name). Flags override values read from
/// `--config FILE`, a flat key=value file using the long flag names.
ParseResult parse_config(const std::vector<std::string>& args);

/// "start:stop:points", e.g. "0:1.2:241". Throws ArgumentError.
FieldGrid parse_field_grid(const std::string& text);

/// Comma-separated list of temperatures. Throws ArgumentError.
std::vector<double> parse_temperatures(const std::string& text);

/// Parses and executes; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xychain::cli
