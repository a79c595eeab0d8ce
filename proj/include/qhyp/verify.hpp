#pragma once

#include "qhyp/trace_involution.hpp"

namespace qhyp {

/// One proposition-level claim in a verification report. status is "pass",
/// "fail", or "paper-discrepancy" (a documented mismatch with the source
/// text that is reported, never silently corrected, and does not count as a
/// failure).
struct Claim {
  std::string id;
  std::string status;
  std::string note;
};

/// Runs one of the suites {reps, algebra, trace, involutions, all}; lmax
/// bounds the spin modules exercised, q_samples adds rational sample-point
/// re-checks of the symbolic results.
std::vector<Claim> run_suite(const std::string& suite, int lmax,
                             const std::vector<mpq_class>& q_samples = {});

/// True iff no claim has status "fail".
bool suite_ok(const std::vector<Claim>& claims);

}  // namespace qhyp
