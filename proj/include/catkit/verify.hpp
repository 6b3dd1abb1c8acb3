#ifndef CATKIT_VERIFY_HPP
#define CATKIT_VERIFY_HPP

#include <string>
#include <vector>

namespace catkit {

struct VerifyOptions {
  int n_cut = 64;
  int guard_band = 4;
  unsigned seed = 42;
  double algebra_tol = 1e-12;
  double trunc_tol = 1e-8;
  double opt_tol = 1e-9;
  bool exploratory = true;      // run warning-level checks (loss-robustness ordering)
  std::string suite_filter;     // empty = every suite
};

struct VerifyCheck {
  std::string suite;
  std::string name;
  double measured;
  double threshold;
  bool pass;       // measured within threshold (sense depends on the check)
  bool warn_only;  // exploratory: failure prints a warning, never gates
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool all_hard_passed() const;
  int hard_failures() const;
  int warnings() const;
  /// Deterministic CSV body: suite,check,measured,threshold,status.
  std::string to_csv() const;
};

/// Runs every module's invariant suite at desk scale.
VerifyReport run_verification(const VerifyOptions& options = {});

}  // namespace catkit

#endif
