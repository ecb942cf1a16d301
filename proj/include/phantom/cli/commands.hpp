#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phantom/cli/problem.hpp"
#include "phantom/ring/gb_cache.hpp"

namespace phantom::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kFlagged = 2, kResourceAbort = 3 };

struct RunReport {
  std::string command;
  Json task;    // echo of the problem
  Json result;  // deterministic body
  int exit_code = kOk;
  double wall_ms = 0;
  CacheStats cache;

  // "stats" holds the wall time and cache counters; everything else is
  // byte-identical across runs on identical input.
  Json to_json(bool with_stats = true) const;
};

const std::vector<std::string>& command_names();

// Command-line bounds take precedence over the problem file.
struct BoundOverrides {
  std::optional<unsigned> e_max;
  std::optional<std::uint64_t> t_max;
  std::optional<std::uint32_t> degree_budget;
  void apply(Bounds& b) const;
};

// Dispatches a problem to the named kernel operation. Errors propagate as
// exceptions; run_guarded maps them to exit codes.
RunReport run_command(const std::string& command, const ProblemFile& pf);

// Converts InputError and friends (1) and ResourceError (3) into a report with
// an "error" body.
RunReport run_guarded(const std::string& command, const std::string& problem_text,
                      const BoundOverrides& overrides);

// Plain-text rendering of a report body.
std::string render_text(const Json& j, int indent = 0);

}  // namespace phantom::cli
