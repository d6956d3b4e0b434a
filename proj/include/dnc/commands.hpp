#pragma once
#include <optional>
#include <string>
#include <vector>

#include "dnc/dsl.hpp"

namespace dnc {

struct CommandOptions {
  std::string at = "special";  // fiber: special | generic
  int level = 2;               // infnbhd / check-inf depth
  std::optional<int> cutoff;
  std::optional<std::pair<int, int>> hdeg_range;
  std::optional<std::pair<int, int>> weight_range;
};

struct CommandResult {
  std::string text;
  int exit_code = 0;  // 0 ok, 2 when a verification verdict is false
};

const std::vector<std::string>& command_names();

// dispatch; throws dnc::Error for misuse (exit code 1 at the CLI boundary)
CommandResult run_command(const ProblemSpec& spec, const std::string& command,
                          const CommandOptions& opts);

}  // namespace dnc
