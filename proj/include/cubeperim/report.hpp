#ifndef CUBEPERIM_REPORT_HPP
#define CUBEPERIM_REPORT_HPP

#include <string>
#include <vector>

namespace cubeperim {

/// Structured pass/fail record for one invariant check.
struct VerificationReport {
  std::string name;
  std::string inputs;     // human-readable description of the checked input
  double computed = 0.0;  // value on the "checked" side
  double bound = 0.0;     // value it is compared against
  double margin = 0.0;    // signed slack, >= -tolerance means pass
  double tolerance = 0.0;
  bool pass = false;
};

inline VerificationReport make_report(std::string name, std::string inputs,
                                      double computed, double bound,
                                      double margin, double tolerance) {
  VerificationReport r;
  r.name = std::move(name);
  r.inputs = std::move(inputs);
  r.computed = computed;
  r.bound = bound;
  r.margin = margin;
  r.tolerance = tolerance;
  r.pass = margin >= -tolerance;
  return r;
}

}  // namespace cubeperim

#endif
