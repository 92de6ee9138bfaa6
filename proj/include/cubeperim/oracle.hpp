#ifndef CUBEPERIM_ORACLE_HPP
#define CUBEPERIM_ORACLE_HPP

// Independent ground truth for the quadrature layer: the exact
// piecewise-polynomial density of S = sum a_k U_k (U_k uniform on
// [-1/2, 1/2]) for real sections, and a seeded Monte-Carlo estimator for
// complex sections.  Section volumes satisfy A(a, t) = f_S(t/2).

#include <cstdint>
#include <vector>

#include "cubeperim/sections.hpp"

namespace cubeperim::oracle {

struct PiecewisePolyDensity {
  std::vector<double> breakpoints;  // sorted; support = [front, back]
  // coefficients[i] = ascending-power polynomial on
  // [breakpoints[i], breakpoints[i+1]].
  std::vector<std::vector<double>> coefficients;
  std::vector<double> weights;  // generating positive weights

  double eval(double x) const;
  /// Exact integral over the support (per-piece polynomial antiderivatives).
  double integral() const;

  static PiecewisePolyDensity build(const std::vector<double>& weights);
};

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Density of sum a_k U_k at x via the alternating 2^m sum, terms sorted by
/// magnitude and summed compensated.  Zero weights are dropped; more than 25
/// positive weights are rejected.
double irwin_hall_density(const std::vector<double>& weights, double x);

/// A(a, t) = irwin_hall_density(a.coords, t/2); real field only.
double section_volume_oracle(const Direction& a, double t);

/// Perimeter entirely from the density: D_k = irwin_hall_density of the
/// reduced weights a_j/sqrt(1-a_k^2) at a_k'/2, no oscillatory quadrature.
double perimeter_oracle(const Direction& a);

/// Complex section volume as a planar density at the origin: W = sum a_k Z_k
/// with Z_k uniform on the disc of radius 1/sqrt(pi); estimate
/// count(|W| < eps) / (samples * pi * eps^2).  Deterministic: fixed 16-shard
/// layout, shard RNGs derived from the seed by splitmix64.
McEstimate mc_complex_section(const Direction& a, std::int64_t samples,
                              double eps, std::uint64_t seed);

}  // namespace cubeperim::oracle

#endif
