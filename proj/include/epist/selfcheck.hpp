#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace epist {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SelfCheckOptions {
  std::uint64_t seed = 1;
  bool small = true;  // desk-scale sizes; false enlarges the randomized runs
};

// Runs the module property suite (exact identities, oracle cross-checks,
// randomized laws) and reports one line per check.
std::vector<CheckResult> run_selfchecks(const SelfCheckOptions& opt);

}  // namespace epist
