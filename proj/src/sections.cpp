#include "cubeperim/sections.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cubeperim/ballfn.hpp"

namespace cubeperim {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double checked(const oscint::QuadratureResult& r, const char* what) {
  if (!r.converged) {
    throw QuadratureError(std::string("quadrature did not converge in ") +
                          what);
  }
  return r.value;
}

double root1m(double a) {
  // sqrt(1 - a^2) with clamping against rounding at a = 1.
  return std::sqrt(std::max(0.0, 1.0 - a * a));
}

}  // namespace

Direction Direction::canonicalize(std::vector<double> raw, Field field) {
  if (raw.size() < 2) {
    throw std::invalid_argument("direction needs at least 2 coordinates");
  }
  for (double& x : raw) x = std::abs(x);
  double norm2 = std::inner_product(raw.begin(), raw.end(), raw.begin(), 0.0);
  if (norm2 <= 0.0) {
    throw std::invalid_argument("direction must be nonzero");
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& x : raw) x *= inv;
  std::sort(raw.begin(), raw.end(), std::greater<double>());
  Direction d;
  d.coords = std::move(raw);
  d.field = field;
  return d;
}

Direction Direction::a_max(int n, Field field) {
  std::vector<double> c(n, 0.0);
  c[0] = c[1] = 1.0;
  return canonicalize(std::move(c), field);
}

Direction Direction::a_min(int n, Field field) {
  std::vector<double> c(n, 0.0);
  c[0] = 1.0;
  return canonicalize(std::move(c), field);
}

double section_volume(const Direction& a, double t,
                      const oscint::QuadratureSpec& spec) {
  if (a.field == Field::real) {
    return checked(oscint::integrate_sinc_product_cos(a.coords, t, {}, spec),
                   "section_volume");
  }
  return checked(oscint::integrate_j1c_product_J0(a.coords, t, {}, spec),
                 "section_volume");
}

double dk(const Direction& a, int k, const oscint::QuadratureSpec& spec) {
  if (k < 1 || k > a.n()) {
    throw std::invalid_argument("dk: index out of range");
  }
  if (a.coords[k - 1] == 0.0) {
    return section_volume(a, 0.0, spec);
  }
  double rest = 0.0;
  for (int j = 0; j < a.n(); ++j) {
    if (j != k - 1) rest += a.coords[j] * a.coords[j];
  }
  if (rest == 0.0) {
    // a = a_min and k = 1: the section lies inside the two facets orthogonal
    // to e_1 and meets no others, so the facet integral vanishes (this is
    // also the regularized value of the plain cosine integral).
    return 0.0;
  }
  if (a.field == Field::real) {
    return checked(
        oscint::integrate_sinc_product_cos(a.coords, 0.0, k - 1, spec), "dk");
  }
  return checked(oscint::integrate_j1c_product_J0(a.coords, 0.0, k - 1, spec),
                 "dk");
}

double perimeter(const Direction& a, const oscint::QuadratureSpec& spec) {
  if (a.n() < 3) {
    throw std::invalid_argument("perimeter requires n >= 3");
  }
  double sum = 0.0;
  for (int k = 1; k <= a.n(); ++k) {
    const double w = 1.0 - a.coords[k - 1] * a.coords[k - 1];
    if (w <= 1e-15) continue;  // weight vanishes; skip the (divergent) D_k
    const double d = dk(a, k, spec);
    sum += (a.field == Field::real ? std::sqrt(w) : w) * d;
  }
  return (a.field == Field::real ? 2.0 : 2.0 * kPi) * sum;
}

double perimeter_n3_closed(const Direction& a) {
  if (a.n() != 3 || a.field != Field::real) {
    throw std::invalid_argument("perimeter_n3_closed: n=3 real only");
  }
  const double a1 = a.coords[0], a2 = a.coords[1], a3 = a.coords[2];
  double half;
  if (a1 >= a2 + a3) {
    half = (root1m(a2) + root1m(a3)) / a1;
  } else {
    half = root1m(a1) * (a2 + a3 - a1) / (2 * a2 * a3) +
           root1m(a2) * (a1 + a3 - a2) / (2 * a1 * a3) +
           root1m(a3) * (a1 + a2 - a3) / (2 * a1 * a2);
  }
  return 2.0 * half;
}

double perimeter_n4_closed(const Direction& a) {
  if (a.n() != 4 || a.field != Field::real) {
    throw std::invalid_argument("perimeter_n4_closed: n=4 real only");
  }
  const double a1 = a.coords[0], a2 = a.coords[1], a3 = a.coords[2],
               a4 = a.coords[3];
  const double s2 = root1m(a2), s3 = root1m(a3), s4 = root1m(a4);
  double half;
  if (a1 < a2 + a3 - a4) {
    // Last coefficient is 1/a1 - ((a2+a3-a1)^2 + a4^2)/(4 a1 a2 a3); derived
    // from the exact three-weight density and continuous across the seam.
    half = root1m(a1) * (a2 + a3 - a1) / (2 * a2 * a3) +
           s2 * (a1 + a3 - a2) / (2 * a1 * a3) +
           s3 * (a1 + a2 - a3) / (2 * a1 * a2) +
           s4 * (1.0 / a1 -
                 ((a2 + a3 - a1) * (a2 + a3 - a1) + a4 * a4) /
                     (4 * a1 * a2 * a3));
  } else if (a1 <= a2 + a3 + a4) {
    const double num = (a2 + a3 + a4 - a1) * (a2 + a3 + a4 - a1);
    half = (s2 + s3 + s4) / a1;
    if (num > 0.0) {  // a4 = 0 on the branch boundary makes the term 0/0
      half -= num / (8 * a1 * a2 * a3 * a4) *
              (-a1 * root1m(a1) + a2 * s2 + a3 * s3 + a4 * s4);
    }
  } else {
    half = (s2 + s3 + s4) / a1;
  }
  return 2.0 * half;
}

double holder_bound(const Direction& a) {
  if (a.field != Field::real) {
    throw std::invalid_argument("holder_bound: real field only");
  }
  if (a.coords[0] > 1.0 / std::sqrt(2.0) + 1e-12) {
    throw std::invalid_argument("holder_bound requires a1 <= 1/sqrt(2)");
  }
  double b = std::sqrt(2.0);
  for (double ak : a.coords) {
    if (ak == 0.0) continue;
    b *= std::pow(ballfn::ball_f(1.0 / (ak * ak)), ak * ak);
  }
  return b;
}

double projection_bound(const Direction& a) {
  const double a1 = a.coords[0];
  if (a1 <= 1.0 / std::sqrt(2.0)) {
    throw std::invalid_argument("projection_bound requires a1 > 1/sqrt(2)");
  }
  return a.field == Field::real ? 1.0 / a1 : 1.0 / (a1 * a1);
}

double cor5_bound(double t, int l) {
  return std::pow(2.0 / (1.0 + t * t), 0.5 * l);
}

SectionProfile section_profile(const Direction& a,
                               const oscint::QuadratureSpec& spec) {
  SectionProfile p;
  p.l = field_multiplier(a.field);
  p.A = section_volume(a, 0.0, spec);
  p.D.resize(a.n());
  for (int k = 1; k <= a.n(); ++k) p.D[k - 1] = dk(a, k, spec);
  if (a.n() >= 3) p.P = perimeter(a, spec);
  const double a1 = a.coords[0];
  if (a1 > 1.0 / std::sqrt(2.0)) {
    p.projection_bound = projection_bound(a);
  } else if (a.field == Field::real) {
    p.holder_bound = holder_bound(a);
  }
  return p;
}

}  // namespace cubeperim
