#ifndef CUBEPERIM_SPECFUN_HPP
#define CUBEPERIM_SPECFUN_HPP

// Self-contained special-function kernels: sinc, Bessel J0/J1, the normalized
// j1c(x) = 2 J1(x)/x, the sine integral Si, erf, and the generalized
// exponential integral E_nu on the imaginary axis (used for analytic tails of
// semi-infinite oscillatory integrals).

#include <complex>

namespace cubeperim::specfun {

/// sin(x)/x with the removable singularity filled in: sinc(0) = 1.
double sinc(double x);

/// Bessel function of the first kind, order 0.  Absolute error <= ~1e-13 on
/// [0, 1e4]; power series below the switchover, Hankel asymptotics above.
double bessel_j0(double x);

/// Bessel function of the first kind, order 1 (odd in x).
double bessel_j1(double x);

/// 2 J1(x)/x with j1c(0) = 1; the complex-case analogue of sinc.
double j1c(double x);

/// Sine integral Si(x) = ∫_0^x sinc(t) dt, x >= 0.
/// Series for small x; Si(x) = pi/2 + Im E1(ix) (continued fraction) above.
double sine_integral(double x);

/// Error function (2/sqrt(pi)) ∫_0^x exp(-t^2) dt.
double erf(double x);

/// Generalized exponential integral E_nu(z) = ∫_1^∞ e^{-z u} u^{-nu} du,
/// for real order nu >= 0 and z on (or near) the imaginary axis, z != on the
/// negative real axis.  For nu > 1, E_nu(0) = 1/(nu-1).  Used for the exact
/// oscillatory tails  ∫_X^∞ e^{i w s} s^{-nu} ds = X^{1-nu} E_nu(-i w X).
std::complex<double> expint_en(double nu, std::complex<double> z);

/// Switchover points exposed for the overlap tests.
inline constexpr double kBesselSwitch = 16.0;
inline constexpr double kSiSwitch = 4.0;

}  // namespace cubeperim::specfun

#endif
