#pragma once

#include <string>
#include <vector>

#include "demival/json_io.hpp"

namespace demival::cli {

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kUsageError = 2 };

struct CommandOutcome {
  int exit_code = kSuccess;
  Json json;
  std::string human;
  bool human_requested = false;

  /// Text the executable prints: JSON unless --human was given.
  std::string rendered() const;
};

/// argv[0] is the program name.
CommandOutcome run_command(const std::vector<std::string>& argv);

}  // namespace demival::cli
