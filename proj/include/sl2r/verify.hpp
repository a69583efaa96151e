#pragma once

#include <string>
#include <vector>

namespace sl2r {

enum class VerifyLevel {
  quick,
  full,
};

struct SuiteResult {
  std::string name;
  std::string metric;  // "max residual" for upper bounds, "min defect" for floors
  double value{};
  double threshold{};
  bool passed{};
  std::vector<std::string> lines;  // per-case detail
};

struct VerificationReport {
  std::vector<SuiteResult> suites;
  bool all_passed{};
};

// Built-in self checks: isometry constraints on random rotation words,
// invariant-plane membership, the solver against the closed form and the
// trace cross-check, side-surface closure under the generators, and the
// non-face-to-face defect.  tol_scale multiplies every suite tolerance
// (values < 1 tighten the gates; used to exercise the failure path).
VerificationReport run_verification(VerifyLevel level, double tol_scale = 1.0);

std::string format_verification(const VerificationReport& report);

}  // namespace sl2r
