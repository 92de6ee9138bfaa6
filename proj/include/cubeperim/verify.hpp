#ifndef CUBEPERIM_VERIFY_HPP
#define CUBEPERIM_VERIFY_HPP

// Invariant suites shared by the CLI `verify` command and the acceptance
// battery.  Each suite returns one report per checked instance.

#include <cstdint>
#include <string>
#include <vector>

#include "cubeperim/report.hpp"

namespace cubeperim::verify {

struct SuiteOptions {
  int n_min = 3;
  int n_max = 8;
  int samples = 50;     // random directions per n where applicable
  std::uint64_t seed = 7;
};

/// Sum identity sum_k D_k = (n-1) A on random directions.
std::vector<VerificationReport> suite_prop3(const SuiteOptions& opt);
/// D_k <= A on random directions.
std::vector<VerificationReport> suite_prop4(const SuiteOptions& opt);
/// Offset sections against (2/(1+t^2))^{l/2}.
std::vector<VerificationReport> suite_cor5(const SuiteOptions& opt);
/// Perimeter maximum: search margins and the a_max closed values.
std::vector<VerificationReport> suite_thm1(const SuiteOptions& opt);
/// Ball-function values, envelope, appendix totals, special points.
std::vector<VerificationReport> suite_ballfn(const SuiteOptions& opt);
/// Distribution-function comparison: single sign change, crossing table.
std::vector<VerificationReport> suite_np(const SuiteOptions& opt);
/// Two-weight |sinc| power integral over its box.
std::vector<VerificationReport> suite_lemma10(const SuiteOptions& opt);
/// Interpolation sweeps for the two-variable and one-variable branches.
std::vector<VerificationReport> suite_lemmas89(const SuiteOptions& opt);
/// Perimeter lower bound on random directions, both fields.
std::vector<VerificationReport> suite_prop11(const SuiteOptions& opt);
/// Quadrature vs density oracle, volume and perimeter.
std::vector<VerificationReport> suite_oracle_equiv(const SuiteOptions& opt);

/// Dispatch by suite name ("all" concatenates every suite).  Throws
/// std::invalid_argument for unknown names.
std::vector<VerificationReport> run_suite(const std::string& name,
                                          const SuiteOptions& opt);

/// Names accepted by run_suite, in display order.
const std::vector<std::string>& suite_names();

}  // namespace cubeperim::verify

#endif
