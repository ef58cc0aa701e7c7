#pragma once
// Batch jobs behind the command-line front end.

#include "entsym/error.hpp"
#include "entsym/serialize.hpp"

#include <string>
#include <vector>

namespace entsym {

inline constexpr const char* kOutputDirEnv = "ENTSYM_OUTPUT_DIR";

/// Exit status of a job.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitInvalid = 2,
  kExitBudget = 3,
  kExitInfeasible = 4,
  kExitCheckFailed = 5,
};

int exit_code_for(ErrorKind kind) noexcept;

struct JobConfig {
  std::string command;
  /// Command parameters: n, m, r, d, p, source, epsilon, R, R_min, R_max,
  /// R_step, eta, trials, seed, budget caps and so on.
  Json params = Json::object();
  /// Empty: $ENTSYM_OUTPUT_DIR/<command>.<ext> when set, else standard output.
  std::string output_path;
  std::string format = "json";
  int threads = 1;

  /// Accepts {"command", "params", "output": {"path", "format"}, "threads"}.
  static JobConfig from_json(const Json& j);
  Json to_json() const;
};

const std::vector<std::string>& job_commands();

struct JobOutcome {
  int exit_code = kExitOk;
  /// Rendered output (also written to `path` when one was resolved).
  std::string rendered;
  std::string path;
  /// Human-readable status lines (oracle-check verdicts, error summary).
  std::vector<std::string> messages;
  /// {"kind", "message"} on failure, null otherwise.
  Json error;
};

/// Runs one job. Library errors become exit codes and an error record; only
/// unexpected exceptions escape as kExitInternal records.
JobOutcome run(const JobConfig& config);

}  // namespace entsym
