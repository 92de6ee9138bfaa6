#ifndef CUBEPERIM_BALLFN_HPP
#define CUBEPERIM_BALLFN_HPP

// Ball's integral function f(p) = sqrt(p/2) (2/pi) ∫_0^∞ |sinc|^p, its
// complex (Bessel) analogue, the two bound pipelines behind the f(9/4) and
// f(sqrt(2)+1/2) estimates, the convexity witness, and the
// Nazarov-Podkorytov distribution-function comparison of |sinc| vs
// exp(-x^2/6).

#include <array>

#include "cubeperim/oscint.hpp"

namespace cubeperim::ballfn {

/// f(p) for p > 1; accuracy ~1e-9.  Concentrated-peak branch for p >= 64.
double ball_f(double p, const oscint::QuadratureSpec& spec = {});

/// Complex analogue (p/2)(1/2) ∫_0^∞ |j1c(s)|^p s ds, p > 4/3; ~1e-8.
double ball_f_complex(double p, const oscint::QuadratureSpec& spec = {});

/// Upper-bound pipeline for f(9/4): arch terms I_0..I_5 plus the J_6 tail,
/// each expressed through the sine integral.
struct ArchBound94 {
  std::array<double, 6> arch;  // I_0..I_5
  double tail = 0.0;           // J_6
  double total = 0.0;
};
ArchBound94 appendix_bound_9_4();

/// Upper-bound pipeline for f(sqrt(2)+1/2): closed erf/exp head on
/// (0, pi/2), direct quadrature on (pi/2, pi) and (pi, 6 pi), zeta tail.
struct PieceBoundSqrt2Half {
  double head = 0.0;    // (0, pi/2) closed form
  double second = 0.0;  // (pi/2, pi)
  double middle = 0.0;  // (pi, 6 pi)
  double tail = 0.0;    // (6 pi, ∞) zeta bound
  double total = 0.0;
};
PieceBoundSqrt2Half appendix_bound_sqrt2_half();

/// ∫_0^∞ h(p,x) |sinc(x)|^p dx with
/// h(p,x) = 4p^2 (ln|sinc|)^2 + 4p ln|sinc| - 1; positive on the convexity
/// range [sqrt(2)+1/2, 9/4] (claimed >= 1/5).
double convexity_witness(double p, const oscint::QuadratureSpec& spec = {});

struct CrossingPoint {
  double x = 0.0;  // unique root of sinc(x) = y_p in (0, pi)
  double y = 0.0;  // exp(-(1+sqrt(2))/(2p))
};
CrossingPoint crossing_point(double p);

struct NpComparison {
  double y = 0.0;
  double G = 0.0;  // measure of {x > 0 : |sinc(x)| > y}
  double H = 0.0;  // sqrt(6 ln(1/y))
};
NpComparison np_compare(double y);

struct SpecialPoints {
  double p1 = 0.0;  // f(p1) = sqrt(3/pi), p1 in (2, 2.5)
  double p2 = 0.0;  // argmin f, in (2.5, 4.5)
  double p0 = 0.0;  // inflection f'' = 0, in (4, 5)
};
SpecialPoints find_special_points(const oscint::QuadratureSpec& spec = {});

/// Large-p expansion sqrt(3/pi) (1 - (3/20)/p - (13/1120)/p^2).
double kos_asymptotic(double p);

/// Second derivative of f from the differentiated integrals (ln-weighted
/// quadrature), not finite differences; used to locate p0 accurately.
double ball_f_second_derivative(double p);

}  // namespace cubeperim::ballfn

#endif
