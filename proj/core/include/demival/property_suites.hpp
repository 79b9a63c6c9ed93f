#pragma once

// Seeded property suites over every shipped valuation. `demival check` runs
// them; the acceptance tests run them at pinned sample counts.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace demival {

struct SuiteResult {
  std::string name;
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const noexcept { return failures == 0; }
};

using SuiteFn = SuiteResult (*)(std::uint64_t seed, std::size_t samples);

struct SuiteInfo {
  std::string_view name;
  SuiteFn run;
};

/// Registry in a fixed order.
const std::vector<SuiteInfo>& property_suites();

/// Runs one suite with its seed derived from the master seed and its name.
SuiteResult run_suite(std::string_view name, std::uint64_t master_seed, std::size_t samples);
std::vector<SuiteResult> run_all_suites(std::uint64_t master_seed, std::size_t samples);

}  // namespace demival
