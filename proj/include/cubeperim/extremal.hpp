#ifndef CUBEPERIM_EXTREMAL_HPP
#define CUBEPERIM_EXTREMAL_HPP

// Direct verification of the perimeter maximum by search, the Lemma 8-9
// interpolation-function sweeps, the Lemma 10 box bound, and the perimeter
// lower bound.

#include <cstdint>

#include "cubeperim/report.hpp"
#include "cubeperim/sections.hpp"

namespace cubeperim::extremal {

struct SearchConfig {
  int n = 3;
  Field field = Field::real;
  int grid_resolution = 24;  // coarse grid per coordinate, >= 10
  int multistarts = 50;
  double local_tol = 1e-10;
  std::uint64_t seed = 0;
};

struct ExtremalReport {
  Direction best_direction;
  double best_value = 0.0;
  double target_value = 0.0;  // perimeter at a_max
  double margin = 0.0;        // target_value - best_value
  std::int64_t evaluations = 0;
};

/// Maximize the perimeter over canonical directions (coarse grid +
/// Nelder-Mead polish, parametrized by squares on the unit sphere).
ExtremalReport search_max_perimeter(const SearchConfig& cfg);

/// P >= 2(n-2) (real) / 2 pi (n-2) (complex), within tolerance.
VerificationReport check_lower_bound(const Direction& a);

/// (2/pi) ∫_0^∞ |sinc(a1 s) sinc(a2 s)|^{1/(a1^2+a2^2)} ds on the box
/// a1 in [0.7095, 0.7149], a2 in [1/sqrt(10), 0.5803]; bounded by
/// 0.985 sqrt(2).  Throws std::domain_error outside the box.
double lemma10_check(double a1, double a2,
                     const oscint::QuadratureSpec& spec = {});

/// Grid sweep of the interpolation functions phi, psi, gamma: monotonicity
/// signs, the endpoint identity gamma(1/sqrt2,1/sqrt2) sqrt2 = (n-2)sqrt2+1,
/// and the n >= 7 conclusion / n = 5,6 exception windows.
VerificationReport interpolation_sweep(int n);

// --- Interpolation-function internals, exposed for the fine-grained tests.

/// phi2(t) = (9t^2-4) + (4-8t^2) sqrt(3/pi).
double interp_phi2(double t);
/// phi1(a1) = (1 - (sqrt2+1/2)a1^2 + (2a1^2-1)(51/50)) / (3/2 - sqrt2).
double interp_phi1(double a1);
/// Two-variable branch (a2 >= 2/3): psi1, psi2 and the gamma envelopes.
double interp8_psi1(double a1, double a2);
double interp8_psi2(double a1, double a2);
double interp8_gamma(int n, double a1, double a2);    // bracket * psi1
double interp8_gamma1(int n, double a1, double a2);   // bracket * psi2 * sqrt2
double interp8_gamma2(int n, double a1, double a2);   // bracket / a1
/// One-variable branch (a2 < 2/3): psi and gamma in a1 only.
double interp9_psi1(double a1);
double interp9_psi2(double a1);
double interp9_gamma(int n, double a1);
double interp9_gamma1(int n, double a1);
double interp9_gamma2(int n, double a1);

/// Root of psi2(a1) sqrt2 = 1/a1 (n-independent), ~0.71254.
double interp9_crossing();
/// a1-window where min(gamma1, gamma2) exceeds (n-2)sqrt2+1 (empty for
/// n >= 7); lo/hi of the exception interval for n = 5, 6.
struct ExceptionWindow {
  bool empty = true;
  double lo = 0.0;
  double hi = 0.0;
  double max_excess = 0.0;
};
ExceptionWindow interp9_exception_window(int n);
/// Largest a2 below which the refined two-variable bound still exceeds the
/// target for some a1 in the exception window (n = 5 or 6).
double interp9_a2_threshold(int n);

}  // namespace cubeperim::extremal

#endif
