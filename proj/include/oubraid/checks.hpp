#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oubraid {

struct CheckResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::size_t passed = 0;
  /// First failing case: word, strand count, case seed and what differed.
  std::optional<std::string> counterexample;

  bool ok() const noexcept { return !counterexample.has_value(); }
};

/// Names accepted by run_check, in display order.
const std::vector<std::string>& check_suites();

/// Runs `cases` seeded random instances of a property suite, stopping at the
/// first failure. Throws std::invalid_argument for an unknown suite.
CheckResult run_check(std::string_view suite, std::uint64_t seed, std::size_t cases);

}  // namespace oubraid
