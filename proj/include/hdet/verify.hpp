// Self-verification suites: every identity, closed form, and invariant the
// library rests on, runnable by name with deterministic sampling. Exact
// checks use rational arithmetic (tolerance 0); numeric checks record the
// worst residual and the point where it occurred.
#ifndef HDET_VERIFY_HPP
#define HDET_VERIFY_HPP

#include <string>
#include <vector>

#include "hdet/types.hpp"

namespace hdet {

// One verified identity (possibly swept over many sample points).
struct CaseResult {
  std::string name;       // identity id, stable across runs
  std::string point;      // worst sample point / mismatch note
  double residual = 0.0;  // max |residual| seen; 0 for clean exact checks
  double tolerance = 0.0; // acceptance threshold (0 = exact)
  double seconds = 0.0;   // wall time spent evaluating this case
  bool passed = false;    // residual <= tolerance
};

struct VerificationReport {
  std::string suite;
  std::vector<CaseResult> cases;

  int cases_total() const { return static_cast<int>(cases.size()); }
  int cases_passed() const;
  double max_residual() const;
  bool all_passed() const { return cases_passed() == cases_total(); }
};

// Canonical suite order: combinatorics, hurwitz, multigamma, gammafactor,
// selberg.
const std::vector<std::string>& verify_suite_names();

// Run one suite by name (unknown names raise domain_error). A non-default
// cfg.abs_tol overrides the threshold of every inexact case; cfg.fd_step
// feeds the finite-difference checks.
VerificationReport run_suite(const std::string& name,
                             const ToleranceConfig& cfg = {});

std::vector<VerificationReport> run_all(const ToleranceConfig& cfg = {});

// Fixed-format text rendering: one line per case plus a summary line.
std::string format_report(const VerificationReport& rep);

}  // namespace hdet

#endif  // HDET_VERIFY_HPP
