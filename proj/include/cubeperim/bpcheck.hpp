#ifndef CUBEPERIM_BPCHECK_HPP
#define CUBEPERIM_BPCHECK_HPP

// Busemann-Petty surface-area counterexample: the ball whose central-section
// boundary measure matches the cube's maximum has larger total surface than
// the cube once the dimension is large enough.

#include <vector>

namespace cubeperim::bpcheck {

struct BpRow {
  int n = 0;
  double radius = 0.0;
  double bp = 0.0;
  bool counterexample = false;  // bp < 1
};

/// Radius r with vol_{n-2}(r S^{n-2}) = 2((n-2)sqrt2 + 1); log-Gamma form.
double ball_radius(int n);

/// BP(n) = vol_{n-1}(r S^{n-1}) / (2n), real-valued in n for root finding.
/// Counterexample iff < 1.
double bp_value(double n);

/// Complex analogue: radius in R^{2n} matching the polydisc maximum
/// 2 pi (2(n-2)+1) on the (2n-3)-sphere of the section.
double ball_radius_complex(double n);

/// Ratio of the matched ball's surface measure to the polydisc's 2 pi n.
double bp_complex_value(double n);

/// Rows n_min..n_max (3 <= n_min <= n_max <= 200); bp strictly decreasing.
std::vector<BpRow> bp_table(int n_min, int n_max);

/// Root of bp_value(x) = 1 (~13.70) or bp_complex_value(x) = 1 (~10.4).
double bp_root(bool complex_field);

}  // namespace cubeperim::bpcheck

#endif
