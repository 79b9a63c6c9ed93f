#pragma once

#include <stdexcept>
#include <string>

namespace demival {

/// Domain error carrying a machine-readable code (e.g. "factor_bound",
/// "zero_ideal", "parse"). The CLI maps these onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace demival
