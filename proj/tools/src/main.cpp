#include <iostream>

#include "demival_cli/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  const auto outcome = demival::cli::run_command(args);
  auto& out = outcome.exit_code == demival::cli::kUsageError ? std::cerr : std::cout;
  out << outcome.rendered() << '\n';
  return outcome.exit_code;
}
