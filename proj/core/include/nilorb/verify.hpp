#ifndef NILORB_VERIFY_HPP
#define NILORB_VERIFY_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace nilorb {

/// Outcome of one cross-check suite: how many checks ran, which failed.
struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
  void expect(bool condition, std::string failure);
};

struct VerifyOptions {
  /// Largest rank swept for the classical families.
  int max_rank = 7;
  /// Largest partition total enumerated by the paving suite.
  int paving_bound = 8;
  /// 0 picks NILORB_WORKERS or the hardware concurrency.
  unsigned workers = 0;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;

  bool ok() const noexcept;
  std::size_t total_checks() const noexcept;
};

SuiteResult verify_lie_core(const VerifyOptions& options);
SuiteResult verify_formula_oracle(const VerifyOptions& options);
SuiteResult verify_orbit_invariants(const VerifyOptions& options);
SuiteResult verify_paving(const VerifyOptions& options);
SuiteResult verify_decomposition(const VerifyOptions& options);
SuiteResult verify_exceptional_tables(const VerifyOptions& options);

/// Every suite above, in that order.
VerifyReport verify_all(const VerifyOptions& options);

}  // namespace nilorb

#endif  // NILORB_VERIFY_HPP
