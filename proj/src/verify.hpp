#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace shellbound {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Runs every module invariant and returns one row per check. deep selects
/// the full sample sizes; quick mode keeps the same coverage at a
/// fraction of the samples (used by unit tests).
std::vector<CheckResult> run_verification(std::uint64_t seed, bool deep);

}  // namespace shellbound
