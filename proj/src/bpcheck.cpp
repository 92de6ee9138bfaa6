#include "cubeperim/bpcheck.hpp"

#include <cmath>
#include <stdexcept>

namespace cubeperim::bpcheck {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const double kSqrt2 = std::sqrt(2.0);
const double kLnPi = std::log(kPi);

// vol_{d}(S^d of radius 1) in log space: ln(2 pi^{(d+1)/2} / Gamma((d+1)/2)).
double ln_unit_sphere(double d) {
  return std::log(2.0) + 0.5 * (d + 1.0) * kLnPi - std::lgamma(0.5 * (d + 1.0));
}

double ln_ball_radius(double n) {
  // vol_{n-2}(r S^{n-2}) = 2((n-2)sqrt2 + 1).
  return (std::log(2.0 * ((n - 2.0) * kSqrt2 + 1.0)) - ln_unit_sphere(n - 2.0)) /
         (n - 2.0);
}

double ln_ball_radius_complex(double n) {
  // In R^{2n}: vol_{2n-4}(r S^{2n-4}) = 2 pi (2(n-2) + 1).
  return (std::log(2.0 * kPi * (2.0 * (n - 2.0) + 1.0)) -
          ln_unit_sphere(2.0 * n - 4.0)) /
         (2.0 * n - 4.0);
}

}  // namespace

double ball_radius(int n) {
  if (n < 3) throw std::invalid_argument("ball_radius: n >= 3");
  return std::exp(ln_ball_radius(n));
}

double bp_value(double n) {
  if (!(n > 2.0)) throw std::invalid_argument("bp_value: n > 2");
  // vol_{n-1}(r S^{n-1}) / (2n).
  return std::exp((n - 1.0) * ln_ball_radius(n) + ln_unit_sphere(n - 1.0) -
                  std::log(2.0 * n));
}

double ball_radius_complex(double n) {
  if (!(n > 2.0)) throw std::invalid_argument("ball_radius_complex: n > 2");
  return std::exp(ln_ball_radius_complex(n));
}

double bp_complex_value(double n) {
  if (!(n > 2.0)) throw std::invalid_argument("bp_complex_value: n > 2");
  // vol_{2n-2}(r S^{2n-2}) / (2 pi n).
  return std::exp((2.0 * n - 2.0) * ln_ball_radius_complex(n) +
                  ln_unit_sphere(2.0 * n - 2.0) - std::log(2.0 * kPi * n));
}

std::vector<BpRow> bp_table(int n_min, int n_max) {
  if (n_min < 3 || n_min > n_max || n_max > 200) {
    throw std::invalid_argument("bp_table: need 3 <= n_min <= n_max <= 200");
  }
  std::vector<BpRow> rows;
  rows.reserve(n_max - n_min + 1);
  for (int n = n_min; n <= n_max; ++n) {
    BpRow r;
    r.n = n;
    r.radius = ball_radius(n);
    r.bp = bp_value(n);
    r.counterexample = r.bp < 1.0;
    rows.push_back(r);
  }
  return rows;
}

double bp_root(bool complex_field) {
  auto f = [&](double x) {
    return (complex_field ? bp_complex_value(x) : bp_value(x)) - 1.0;
  };
  double lo = complex_field ? 9.0 : 12.0;
  double hi = complex_field ? 12.0 : 15.0;
  double flo = f(lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace cubeperim::bpcheck
