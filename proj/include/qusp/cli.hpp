#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "qusp/report.hpp"

namespace qusp::cli {

enum class Command {
  Classify,
  Recurrence,
  Spectrum,
  Represent,
  Dual,
  Measure,
  Norms,
  VerifyOrthogonality,
  VerifyAlgebra,
  VerifyIdentities,
  DarbouxChain,
  Sweep,
};

std::string_view to_string(Command command) noexcept;
std::optional<Command> parse_command(std::string_view name) noexcept;

/// True for commands that act on one series and need --beta or --j.
bool needs_series(Command command) noexcept;

struct RunConfig {
  Command command = Command::Classify;
  int N = 2;
  std::optional<double> beta;
  std::optional<int> j;
  bool force_complementary = false;
  int p = 1;
  double tol = 1e-10;
  int precision_bits = 53;
  Format format = Format::Json;
  std::optional<std::string> out;
  int sweep_max_N = 16;
  int samples_per_interval = 5;
};

/// Exit statuses of run().
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRejected = 3;

/// Builds the report for `config`. Library errors propagate as qusp::Error.
Report execute(const RunConfig& config);

/// Executes, renders and writes the report (to config.out or `out`). Errors
/// become a report with an `error` entry. Returns one of the exit statuses.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and calls run().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qusp::cli
