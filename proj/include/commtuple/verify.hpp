#pragma once

// Self-verification suite behind `commtuple verify`: one check per invariant
// of each module, deterministic for a given seed.

#include <cstdint>
#include <string>
#include <vector>

namespace commtuple {

struct VerifyOptions {
  bool full = false;
  std::uint64_t seed = 1;
  /// Test hook: perturbs the closed-form count inside the triple-agreement
  /// check so the suite must report a failure.
  bool inject_failure = false;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace commtuple
