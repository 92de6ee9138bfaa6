#include "cubeperim/ballfn.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "cubeperim/specfun.hpp"

namespace cubeperim::ballfn {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const double kSqrt3OverPi = std::sqrt(3.0 / kPi);

double digamma(double x) {
  double acc = 0.0;
  while (x < 8.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double r = 1.0 / (x * x);
  return acc + std::log(x) - 0.5 / x -
         r * (1.0 / 12 - r * (1.0 / 120 - r * (1.0 / 252 - r / 240)));
}

double trigamma(double x) {
  double acc = 0.0;
  while (x < 8.0) {
    acc += 1.0 / (x * x);
    x += 1.0;
  }
  const double r = 1.0 / (x * x);
  return acc + 1.0 / x + 0.5 * r +
         r / x * (1.0 / 6 - r * (1.0 / 30 - r * (1.0 / 42 - r / 30)));
}

// Period means of |sin u|^q, |sin u|^q ln|sin u|, |sin u|^q ln^2|sin u|
// from the closed form of the first and its q-derivatives.
struct SinLogMeans {
  double m0, m1, m2;
};

SinLogMeans sin_log_means(double q) {
  const double a = 0.5 * (q + 1.0), b = 0.5 * q + 1.0;
  const double m0 = oscint::abs_sin_power_mean(q);
  const double d = 0.5 * (digamma(a) - digamma(b));
  const double m1 = m0 * d;
  const double m2 = m0 * (d * d + 0.25 * (trigamma(a) - trigamma(b)));
  return {m0, m1, m2};
}

// I_j(p) = ∫_0^∞ |sinc x|^p ln^j|sinc x| dx, j = 0,1,2: chunked
// Gauss-Legendre on [0, X] (chunks at the sinc zeros) plus the analytic
// period-mean tail with ∫_X^∞ x^{-p} ln^k x dx in closed form.
struct LogIntegrals {
  double i0, i1, i2;
};

LogIntegrals sinc_log_integrals(double p, double cutoff) {
  LogIntegrals acc{0.0, 0.0, 0.0};
  const int chunks = (int)std::ceil(cutoff / kPi);
  for (int c = 0; c < chunks; ++c) {
    const double lo = c * kPi, hi = (c + 1) * kPi;
    auto piece = [&](int j) {
      return oscint::gauss_legendre(
          [&](double x) {
            const double s = std::abs(specfun::sinc(x));
            if (s <= 0.0) return 0.0;
            const double w = std::pow(s, p);
            const double L = std::log(s);
            return j == 0 ? w : (j == 1 ? w * L : w * L * L);
          },
          lo, hi, 24);
    };
    acc.i0 += piece(0);
    acc.i1 += piece(1);
    acc.i2 += piece(2);
  }
  const double X = chunks * kPi;
  const SinLogMeans m = sin_log_means(p);
  const double q1 = p - 1.0, lx = std::log(X), xp = std::pow(X, -q1);
  const double t0 = xp / q1;
  const double t1 = xp * (lx / q1 + 1.0 / (q1 * q1));
  const double t2 =
      xp * (lx * lx / q1 + 2.0 * lx / (q1 * q1) + 2.0 / (q1 * q1 * q1));
  // ln^j(|sin x|/x) expanded binomially in ln|sin x| and ln x.
  acc.i0 += m.m0 * t0;
  acc.i1 += m.m1 * t0 - m.m0 * t1;
  acc.i2 += m.m2 * t0 - 2.0 * m.m1 * t1 + m.m0 * t2;
  return acc;
}

double ball_f_large_p(double p) {
  // Peak width ~1/sqrt(p): panels of that scale across (0, pi), then the
  // period-mean tail (utterly negligible at these p).
  const double width = 2.0 / std::sqrt(p);
  const int panels = (int)std::ceil(kPi / width);
  double head = 0.0;
  for (int i = 0; i < panels; ++i) {
    head += oscint::gauss_legendre(
        [&](double x) { return std::pow(std::abs(specfun::sinc(x)), p); },
        i * kPi / panels, (i + 1) * kPi / panels, 16);
  }
  const double tail =
      oscint::abs_sin_power_mean(p) * std::pow(kPi, 1.0 - p) / (p - 1.0);
  return std::sqrt(0.5 * p) * (2.0 / kPi) * (head + tail);
}

// k-th positive zero of J1: McMahon start, Newton polish (J1' = J0 - J1/x).
double j1_zero(int k) {
  const double beta = (k + 0.25) * kPi;
  double x = beta - 3.0 / (8.0 * beta);
  for (int it = 0; it < 8; ++it) {
    const double f = specfun::bessel_j1(x);
    const double fp = specfun::bessel_j0(x) - f / x;
    const double step = f / fp;
    x -= step;
    if (std::abs(step) < 1e-14 * x) break;
  }
  return x;
}

double ball_f_arg_check(double p, double min_p, const char* what) {
  if (!(p > min_p)) {
    throw std::invalid_argument(std::string(what) + ": exponent too small");
  }
  return p;
}

}  // namespace

double ball_f(double p, const oscint::QuadratureSpec& spec) {
  ball_f_arg_check(p, 1.0, "ball_f");
  if (p >= 64.0) return ball_f_large_p(p);
  const auto r = oscint::integrate_abs_power({1.0}, p, spec);
  if (!r.converged) throw std::runtime_error("ball_f: quadrature failed");
  return std::sqrt(0.5 * p) * r.value;
}

double ball_f_complex(double p, const oscint::QuadratureSpec& spec) {
  ball_f_arg_check(p, 4.0 / 3.0, "ball_f_complex");
  const double tol = std::max(spec.abs_tol, 1e-13);
  double head = 0.0;
  double lo = 0.0;
  double X = 0.0;
  const int max_zeros = 4000;
  for (int k = 1; k <= max_zeros; ++k) {
    const double hi = j1_zero(k);
    head += oscint::gauss_legendre(
        [&](double s) {
          return std::pow(std::abs(specfun::j1c(s)), p) * s;
        },
        lo, hi, 24);
    lo = X = hi;
    if (k >= 32) {
      const double tail_scale = std::pow(8.0 / kPi, 0.5 * p) *
                                oscint::abs_sin_power_mean(p) *
                                std::pow(X, 2.0 - 1.5 * p) / (1.5 * p - 2.0);
      // Residual error of the mean completion decays like tail/X.
      if (tail_scale * 8.0 / X < tol) break;
    }
  }
  const double tail = std::pow(8.0 / kPi, 0.5 * p) *
                      oscint::abs_sin_power_mean(p) *
                      std::pow(X, 2.0 - 1.5 * p) / (1.5 * p - 2.0);
  return 0.25 * p * (head + tail);
}

ArchBound94 appendix_bound_9_4() {
  const double p0 = 2.25;
  const double c = std::sqrt(0.5 * p0) * 2.0 / kPi;
  using specfun::sine_integral;
  ArchBound94 b;
  b.arch[0] = c * (sine_integral(2 * kPi) - kPi / 48.0);
  // On (pi, 2pi) the quarter power is at most |sinc(x0)|^{1/4} <= 0.683
  // (x0 ~ 4.493); the remaining square integrates to a Si difference.
  b.arch[1] = 0.683 * c * (sine_integral(4 * kPi) - sine_integral(2 * kPi));
  for (int k = 2; k <= 5; ++k) {
    b.arch[k] = c * std::pow(k * kPi, -0.25) *
                (sine_integral(2 * (k + 1) * kPi) - sine_integral(2 * k * kPi));
  }
  b.tail = c * std::pow(6 * kPi, -0.25) * (kPi / 2 - sine_integral(12 * kPi));
  b.total = b.tail;
  for (double v : b.arch) b.total += v;
  return b;
}

PieceBoundSqrt2Half appendix_bound_sqrt2_half() {
  const double p0 = std::sqrt(2.0) + 0.5;
  const double c = std::sqrt(0.5 * p0) * 2.0 / kPi;
  PieceBoundSqrt2Half b;
  // (0, pi/2): sinc^{p0} <= exp(-x^2 p0/6)(1 + x^4 p0/180)^{-?} expansion,
  // integrated in closed form through erf and the Gaussian.
  b.head = c * (kPi / (480.0 * p0) * (36.0 + kPi * kPi * p0) *
                    std::exp(-kPi * kPi * p0 / 24.0) +
                std::sqrt(6.0 * kPi) / std::pow(p0, 1.5) * (0.5 * p0 - 0.075) *
                    specfun::erf(kPi * std::sqrt(p0 / 24.0)));
  auto integrand = [&](double x) {
    return std::pow(std::abs(specfun::sinc(x)), p0);
  };
  b.second = c * oscint::gauss_legendre(integrand, 0.5 * kPi, kPi, 64);
  for (int k = 1; k <= 5; ++k) {
    b.middle += c * oscint::gauss_legendre(integrand, k * kPi, (k + 1) * kPi, 64);
  }
  double partial = 0.0;
  for (int k = 1; k <= 5; ++k) partial += std::pow((double)k, -p0);
  b.tail = c * std::pow(kPi, -p0) * (std::riemann_zeta(p0) - partial) * 1.6;
  b.total = b.head + b.second + b.middle + b.tail;
  return b;
}

double convexity_witness(double p, const oscint::QuadratureSpec&) {
  ball_f_arg_check(p, 1.0, "convexity_witness");
  const LogIntegrals li = sinc_log_integrals(p, 2000.0);
  return 4.0 * p * p * li.i2 + 4.0 * p * li.i1 - li.i0;
}

CrossingPoint crossing_point(double p) {
  CrossingPoint cp;
  cp.y = std::exp(-(1.0 + std::sqrt(2.0)) / (2.0 * p));
  // sinc is strictly decreasing on (0, pi); bisect sinc(x) = y.
  double lo = 0.0, hi = kPi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (specfun::sinc(mid) > cp.y ? lo : hi) = mid;
  }
  cp.x = 0.5 * (lo + hi);
  return cp;
}

NpComparison np_compare(double y) {
  if (!(y > 0.0 && y < 1.0)) {
    throw std::invalid_argument("np_compare: y must lie in (0,1)");
  }
  NpComparison r;
  r.y = y;
  r.H = std::sqrt(6.0 * std::log(1.0 / y));
  // G = |{x > 0 : |sinc x| > y}|: the initial interval plus one interval per
  // arch while the arch maximum still exceeds y.
  double lo0 = 0.0, hi0 = kPi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo0 + hi0);
    (specfun::sinc(mid) > y ? lo0 : hi0) = mid;
  }
  double G = 0.5 * (lo0 + hi0);
  for (int m = 1;; ++m) {
    // Arch maximum of |sinc| on (m pi, (m+1) pi): root of tan x = x.
    double xm = (m + 0.5) * kPi;
    for (int it = 0; it < 60; ++it) {
      const double f = std::tan(xm) - xm;
      const double fp = 1.0 / std::cos(xm) / std::cos(xm) - 1.0;
      const double step = f / fp;
      xm -= step;
      if (std::abs(step) < 1e-15 * xm) break;
    }
    const double peak = std::abs(specfun::sinc(xm));
    if (peak <= y) break;
    auto level = [&](double a, double b, bool increasing) {
      // |sinc| is monotone on [a, b] and crosses y there; bisect.
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        const bool above = std::abs(specfun::sinc(mid)) > y;
        if (above == increasing) b = mid; else a = mid;
      }
      return 0.5 * (a + b);
    };
    // |sinc| rises from 0 at m*pi to the peak, then falls back to 0.
    const double left = level(m * kPi, xm, true);
    const double right = level(xm, (m + 1) * kPi, false);
    G += right - left;
  }
  r.G = G;
  return r;
}

double ball_f_second_derivative(double p) {
  const LogIntegrals li = sinc_log_integrals(p, 1000.0);
  const double c = 2.0 / kPi;
  return c * (-li.i0 / (4.0 * std::sqrt(2.0) * std::pow(p, 1.5)) +
              li.i1 / std::sqrt(2.0 * p) + std::sqrt(0.5 * p) * li.i2);
}

namespace {

double ball_f_first_derivative(double p) {
  const LogIntegrals li = sinc_log_integrals(p, 1000.0);
  const double c = 2.0 / kPi;
  return c * (li.i0 / (2.0 * std::sqrt(2.0 * p)) + std::sqrt(0.5 * p) * li.i1);
}

double bisect(double lo, double hi, const std::function<double(double)>& f,
              double tol) {
  double flo = f(lo);
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
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

}  // namespace

SpecialPoints find_special_points(const oscint::QuadratureSpec& spec) {
  SpecialPoints sp;
  sp.p1 = bisect(2.0, 3.0,
                 [&](double p) { return ball_f(p, spec) - kSqrt3OverPi; },
                 1e-10);
  sp.p2 = bisect(2.5, 4.5, [](double p) { return ball_f_first_derivative(p); },
                 1e-10);
  sp.p0 = bisect(4.0, 5.0, [](double p) { return ball_f_second_derivative(p); },
                 1e-10);
  return sp;
}

double kos_asymptotic(double p) {
  return kSqrt3OverPi * (1.0 - 0.15 / p - (13.0 / 1120.0) / (p * p));
}

}  // namespace cubeperim::ballfn
