#include "cubeperim/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cubeperim::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr long double kPiL = 3.141592653589793238462643383279503L;
constexpr long double kEulerGammaL = 0.577215664901532860606512090082402L;

// Hankel asymptotic evaluation of J_nu (nu = 0 or 1) for x >= kBesselSwitch.
// J_nu(x) = sqrt(2/(pi x)) [P cos(chi) - Q sin(chi)], chi = x - nu pi/2 - pi/4,
// with P, Q the standard asymptotic series in 1/x summed to their minimum term.
double bessel_asymptotic(int nu, double x) {
  const long double mu = 4.0L * nu * nu;
  const long double inv8x = 1.0L / (8.0L * x);
  long double p = 1.0L, q = 0.0L;
  long double term = 1.0L;
  long double prev_mag = std::numeric_limits<long double>::max();
  // a_k = a_{k-1} * (mu - (2k-1)^2) / (8 k x); alternate into P (even k) and
  // Q (odd k) with signs (-1)^{k/2}.
  for (int k = 1; k <= 60; ++k) {
    const long double odd = 2.0L * k - 1.0L;
    term *= (mu - odd * odd) * inv8x / k;
    const long double mag = std::fabs((double)term);
    if (mag >= prev_mag) break;  // divergent asymptotic series: stop at min term
    prev_mag = mag;
    const int r = k % 4;
    if (r == 1) q += term;
    else if (r == 2) p -= term;
    else if (r == 3) q -= term;
    else p += term;
  }
  const long double chi = (long double)x - nu * kPiL / 2.0L - kPiL / 4.0L;
  const long double amp = std::sqrt(2.0L / (kPiL * (long double)x));
  return (double)(amp * (p * std::cos(chi) - q * std::sin(chi)));
}

double bessel_series_j0(double x) {
  const long double q = (long double)x * x / 4.0L;
  long double term = 1.0L, sum = 1.0L;
  for (int k = 1; k <= 120; ++k) {
    term *= -q / ((long double)k * k);
    sum += term;
    if (std::fabs((double)term) < 1e-20L * (1.0L + std::fabs((double)sum))) break;
  }
  return (double)sum;
}

double bessel_series_j1(double x) {
  const long double q = (long double)x * x / 4.0L;
  long double term = 1.0L, sum = 1.0L;
  for (int k = 1; k <= 120; ++k) {
    term *= -q / ((long double)k * (k + 1.0L));
    sum += term;
    if (std::fabs((double)term) < 1e-20L * (1.0L + std::fabs((double)sum))) break;
  }
  return (double)(0.5L * (long double)x * sum);
}

// E1(z) by the standard continued fraction (modified Lentz), valid away from
// the negative real axis; used on the imaginary axis for Si.
std::complex<long double> e1_continued_fraction(std::complex<long double> z) {
  const long double tiny = 1e-300L;
  std::complex<long double> b = z + 1.0L;
  std::complex<long double> c = 1.0L / tiny;
  std::complex<long double> d = 1.0L / b;
  std::complex<long double> h = d;
  for (int i = 1; i <= 20000; ++i) {
    const long double a = -(long double)i * i;
    b += 2.0L;
    d = 1.0L / (a * d + b);
    c = b + a / c;
    const std::complex<long double> delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0L) < 1e-18L) break;
  }
  return h * std::exp(-z);
}

long double si_series(double x) {
  // Si(x) = sum (-1)^k x^{2k+1} / ((2k+1)(2k+1)!)
  const long double x2 = (long double)x * x;
  long double term = (long double)x, sum = 0.0L;
  for (int k = 0; k <= 60; ++k) {
    sum += term / (2.0L * k + 1.0L);
    term *= -x2 / ((2.0L * k + 2.0L) * (2.0L * k + 3.0L));
    if (std::fabs((double)term) < 1e-20L) break;
  }
  return sum;
}

}  // namespace

double sinc(double x) {
  const double ax = std::fabs(x);
  if (ax < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
  }
  return std::sin(x) / x;
}

double bessel_j0(double x) {
  const double ax = std::fabs(x);
  if (std::isnan(x)) return x;
  if (ax < kBesselSwitch) return bessel_series_j0(ax);
  return bessel_asymptotic(0, ax);
}

double bessel_j1(double x) {
  if (std::isnan(x)) return x;
  const double ax = std::fabs(x);
  const double v = ax < kBesselSwitch ? bessel_series_j1(ax) : bessel_asymptotic(1, ax);
  return x < 0 ? -v : v;
}

double j1c(double x) {
  const double ax = std::fabs(x);
  if (ax < 1e-4) {
    // 2 J1(x)/x = 1 - x^2/8 + x^4/192 - ...
    const double x2 = x * x;
    return 1.0 - x2 / 8.0 * (1.0 - x2 / 24.0);
  }
  return 2.0 * bessel_j1(ax) / ax;
}

double sine_integral(double x) {
  if (std::isnan(x)) return x;
  if (x < 0) throw std::domain_error("sine_integral: x must be >= 0");
  if (x < kSiSwitch) return (double)si_series(x);
  // Si(x) = pi/2 + Im E1(ix).
  const std::complex<long double> e1 = e1_continued_fraction({0.0L, (long double)x});
  return (double)(kPiL / 2.0L + e1.imag());
}

double erf(double x) { return std::erf(x); }

std::complex<double> expint_en(double nu, std::complex<double> z) {
  using CLD = std::complex<long double>;
  const CLD zl((long double)z.real(), (long double)z.imag());
  const long double az = std::abs(zl);
  const long double nul = (long double)nu;
  if (az == 0.0L) {
    if (nu <= 1.0) throw std::domain_error("expint_en: E_nu(0) diverges for nu <= 1");
    return {1.0 / (nu - 1.0), 0.0};
  }
  if (az <= 8.0L) {
    const bool integer_order = (nu == std::floor(nu));
    if (integer_order) {
      const int m = (int)nu;
      // E_m(z) = [(-z)^{m-1}/(m-1)!] (-ln z - gamma + H_{m-1})
      //          - sum_{j>=0, j != m-1} (-z)^j / ((j - m + 1) j!)
      long double hm = 0.0L;
      long double fact = 1.0L;  // (m-1)!
      for (int j = 1; j <= m - 1; ++j) { hm += 1.0L / j; fact *= j; }
      CLD sum = 0.0L;
      CLD pow = 1.0L;  // (-z)^j / j!
      long double jfact = 1.0L;
      for (int j = 0; j <= 400; ++j) {
        if (j > 0) { pow *= -zl; jfact *= j; }
        if (j != m - 1) {
          const CLD term = pow / (jfact * (long double)(j - m + 1));
          sum += term;
          if (j > m && std::abs(term) < 1e-22L * (1.0L + std::abs(sum))) break;
        }
      }
      CLD zpow = 1.0L;
      for (int j = 0; j < m - 1; ++j) zpow *= -zl;
      const CLD logz = std::log(zl);
      const CLD lead = zpow / fact * (-logz - kEulerGammaL + hm);
      const CLD r = lead - sum;
      return {(double)r.real(), (double)r.imag()};
    }
    // Non-integer order: E_nu(z) = Gamma(1-nu) z^{nu-1} - sum (-z)^j/(j!(j+1-nu)).
    const long double g = std::tgamma(1.0L - nul);
    const CLD zp = std::exp((nul - 1.0L) * std::log(zl));
    CLD sum = 0.0L;
    CLD pow = 1.0L;
    long double jfact = 1.0L;
    for (int j = 0; j <= 400; ++j) {
      if (j > 0) { pow *= -zl; jfact *= j; }
      const CLD term = pow / (jfact * ((long double)j + 1.0L - nul));
      sum += term;
      if (j > 3 && std::abs(term) < 1e-22L * (1.0L + std::abs(sum))) break;
    }
    const CLD r = g * zp - sum;
    return {(double)r.real(), (double)r.imag()};
  }
  // Continued fraction (modified Lentz), valid off the negative real axis.
  const long double tiny = 1e-300L;
  CLD b = zl + nul;
  CLD c = 1.0L / tiny;
  CLD d = 1.0L / b;
  CLD h = d;
  for (int i = 1; i <= 40000; ++i) {
    const long double a = -(long double)i * ((long double)i + nul - 1.0L);
    b += 2.0L;
    d = 1.0L / (a * d + b);
    c = b + a / c;
    const CLD delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0L) < 1e-17L) break;
  }
  const CLD r = h * std::exp(-zl);
  return {(double)r.real(), (double)r.imag()};
}

}  // namespace cubeperim::specfun
