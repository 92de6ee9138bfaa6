#ifndef CUBEPERIM_OSCINT_HPP
#define CUBEPERIM_OSCINT_HPP

// Semi-infinite oscillatory quadrature engine for integrals of sinc and
// Bessel products.  Strategy: fixed-order Gauss-Legendre on period chunks of
// a finite head [0, X], plus an analytic tail for ∫_X^∞.  For sinc products
// the tail is exact (trig-product expansion into e^{iws} s^{-m} terms and the
// generalized exponential integral); for j1c/J0 products it uses two
// correction orders of the Hankel asymptotics; for |.|^p products it uses the
// analytic mean of the oscillation.  The generic entry point falls back to
// chunked summation with envelope bounds and Euler acceleration.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace cubeperim::oscint {

enum class Acceleration { none, euler_alternating };

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  std::int64_t max_periods = 1000000;
  int points_per_period = 64;
  Acceleration acceleration = Acceleration::euler_alternating;
};

struct QuadratureResult {
  double value = 0.0;
  double est_error = 0.0;
  std::int64_t periods_used = 0;
  double tail_bound = 0.0;
  bool converged = false;
};

/// |f(x)| <= coeff * x^{-power} for x beyond the integration head.
struct Envelope {
  double coeff = 1.0;
  double power = 2.0;
};

/// Generic chunked integrator over [0, ∞).  Chunks have length period_hint;
/// alternating chunk series are Euler-accelerated, constant-sign tails get a
/// power-law completion from the envelope exponent.  Callers must check
/// `converged`.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double period_hint,
                                         const QuadratureSpec& spec = {},
                                         const Envelope& envelope = {});

/// (2/pi) ∫_0^∞ ∏_{k != skip} sinc(a_k s) · cos(c s) ds, where c is
/// cos_weight, or a_skip when skip_index (0-based) is given.  Zero weights are
/// skipped (factor 1).  Throws std::invalid_argument on divergent
/// configurations (no oscillatory factor, or a non-decaying mean component).
QuadratureResult integrate_sinc_product_cos(const std::vector<double>& weights,
                                            double cos_weight,
                                            std::optional<int> skip_index,
                                            const QuadratureSpec& spec = {});

/// (1/2) ∫_0^∞ ∏_{k != skip} j1c(a_k s) · J0(c s) · s ds, with c = J0_weight
/// or a_skip as above.  Requires enough j1c factors for the tail to converge.
QuadratureResult integrate_j1c_product_J0(const std::vector<double>& weights,
                                          double J0_weight,
                                          std::optional<int> skip_index,
                                          const QuadratureSpec& spec = {});

/// (2/pi) ∫_0^∞ ∏_k |sinc(a_k s)|^p ds for p > 1 with p·(#positive weights)
/// > 1.  Positive integrand: chunk boundaries are placed at every factor zero
/// and the tail is completed with the analytic oscillation mean.
QuadratureResult integrate_abs_power(const std::vector<double>& weights,
                                     double exponent,
                                     const QuadratureSpec& spec = {});

/// Fixed-order Gauss-Legendre on [a, b] (nodes cached per order).  Exposed
/// for reuse by the ballfn module and for tests.
double gauss_legendre(const std::function<double(double)>& f, double a,
                      double b, int points);

/// Mean of |sin u|^q over a period: Gamma((q+1)/2) / (sqrt(pi) Gamma(q/2+1)).
double abs_sin_power_mean(double q);

}  // namespace cubeperim::oscint

#endif
