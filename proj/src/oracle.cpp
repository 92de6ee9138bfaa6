#include "cubeperim/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace cubeperim::oracle {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr int kMaxWeights = 25;

std::vector<double> positive_weights(const std::vector<double>& weights) {
  std::vector<double> w;
  for (double a : weights) {
    if (a < 0.0) throw std::invalid_argument("weights must be nonnegative");
    if (a > 0.0) w.push_back(a);
  }
  if (w.empty()) throw std::invalid_argument("all weights are zero");
  if ((int)w.size() > kMaxWeights) {
    throw std::invalid_argument("too many weights for the exact density");
  }
  return w;
}

double compensated_sum(std::vector<double>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](double x, double y) { return std::abs(x) < std::abs(y); });
  double s = 0.0, c = 0.0;
  for (double t : terms) {
    const double y = t - c;
    const double u = s + y;
    c = (u - s) - y;
    s = u;
  }
  return s;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double uniform01(std::mt19937_64& rng) {
  return (double)(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

double irwin_hall_density(const std::vector<double>& weights, double x) {
  const std::vector<double> w = positive_weights(weights);
  const int m = (int)w.size();
  double prod = 1.0, half_sum = 0.0, fact = 1.0;
  for (int i = 0; i < m; ++i) {
    prod *= w[i];
    half_sum += 0.5 * w[i];
    if (i >= 1) fact *= i;
  }
  if (m == 1) {
    // Uniform density with a jump at +-w/2; use the half-limit on the edge so
    // that D_k stays consistent with the (principal-value) cosine integral.
    const double h = 0.5 * w[0];
    if (std::abs(x) < h) return 1.0 / w[0];
    if (std::abs(x) == h) return 0.5 / w[0];
    return 0.0;
  }
  std::vector<double> terms;
  terms.reserve((size_t)1 << m);
  for (std::uint64_t eps = 0; eps < (1ull << m); ++eps) {
    double y = x + half_sum;
    int parity = 0;
    for (int k = 0; k < m; ++k) {
      if (eps & (1ull << k)) {
        y -= w[k];
        parity ^= 1;
      }
    }
    if (y <= 0.0) continue;
    const double t = (m == 1) ? 1.0 : std::pow(y, m - 1);
    terms.push_back(parity ? -t : t);
  }
  return compensated_sum(terms) / (fact * prod);
}

double PiecewisePolyDensity::eval(double x) const {
  if (breakpoints.empty() || x <= breakpoints.front() ||
      x >= breakpoints.back()) {
    return 0.0;
  }
  return irwin_hall_density(weights, x);
}

double PiecewisePolyDensity::integral() const {
  double total = 0.0;
  for (size_t i = 0; i < coefficients.size(); ++i) {
    const double lo = breakpoints[i], hi = breakpoints[i + 1];
    double piece = 0.0;
    for (size_t j = 0; j < coefficients[i].size(); ++j) {
      piece += coefficients[i][j] / (double)(j + 1) *
               (std::pow(hi, j + 1) - std::pow(lo, j + 1));
    }
    total += piece;
  }
  return total;
}

PiecewisePolyDensity PiecewisePolyDensity::build(
    const std::vector<double>& weights) {
  PiecewisePolyDensity d;
  d.weights = positive_weights(weights);
  const int m = (int)d.weights.size();
  double prod = 1.0, half_sum = 0.0, fact = 1.0;
  for (int i = 0; i < m; ++i) {
    prod *= d.weights[i];
    half_sum += 0.5 * d.weights[i];
    if (i >= 1) fact *= i;
  }
  // Hinge roots r_eps = sum(eps_k a_k) - sum(a)/2; distinct ones break pieces.
  struct Hinge {
    double root;
    double sign;  // (-1)^{|eps|}
  };
  std::vector<Hinge> hinges;
  hinges.reserve((size_t)1 << m);
  for (std::uint64_t eps = 0; eps < (1ull << m); ++eps) {
    double r = -half_sum;
    int parity = 0;
    for (int k = 0; k < m; ++k) {
      if (eps & (1ull << k)) {
        r += d.weights[k];
        parity ^= 1;
      }
    }
    hinges.push_back({r, parity ? -1.0 : 1.0});
  }
  for (const Hinge& h : hinges) d.breakpoints.push_back(h.root);
  std::sort(d.breakpoints.begin(), d.breakpoints.end());
  d.breakpoints.erase(std::unique(d.breakpoints.begin(), d.breakpoints.end(),
                                  [](double x, double y) {
                                    return std::abs(x - y) < 1e-13;
                                  }),
                      d.breakpoints.end());
  // On a piece, f(x) = sum over hinges with root < x of
  // sign * (x - r)^{m-1} / ((m-1)! prod); expand binomially.
  std::vector<double> binom(m, 0.0);
  binom[0] = 1.0;
  for (int row = 1; row < m; ++row) {
    for (int j = row; j >= 1; --j) binom[j] += binom[j - 1];
  }
  const double scale = 1.0 / (fact * prod);
  for (size_t i = 0; i + 1 < d.breakpoints.size(); ++i) {
    const double mid = 0.5 * (d.breakpoints[i] + d.breakpoints[i + 1]);
    std::vector<double> coef(m, 0.0);
    for (const Hinge& h : hinges) {
      if (h.root >= mid) continue;
      // (x - r)^{m-1} = sum_j C(m-1,j) x^j (-r)^{m-1-j}
      double rp = 1.0;  // (-r)^{m-1-j}, built from the top power down
      std::vector<double> pow_r(m);
      for (int j = m - 1; j >= 0; --j) {
        pow_r[j] = rp;
        rp *= -h.root;
      }
      for (int j = 0; j < m; ++j) {
        coef[j] += h.sign * binom[j] * pow_r[j] * scale;
      }
    }
    d.coefficients.push_back(std::move(coef));
  }
  return d;
}

double section_volume_oracle(const Direction& a, double t) {
  if (a.field != Field::real) {
    throw std::invalid_argument("density oracle covers the real field only");
  }
  return irwin_hall_density(a.coords, 0.5 * t);
}

double perimeter_oracle(const Direction& a) {
  if (a.field != Field::real) {
    throw std::invalid_argument("density oracle covers the real field only");
  }
  if (a.n() < 3) throw std::invalid_argument("perimeter requires n >= 3");
  double sum = 0.0;
  for (int k = 0; k < a.n(); ++k) {
    const double c2 = 1.0 - a.coords[k] * a.coords[k];
    if (c2 <= 1e-15) continue;
    const double c = std::sqrt(c2);
    std::vector<double> reduced;
    reduced.reserve(a.n() - 1);
    for (int j = 0; j < a.n(); ++j) {
      if (j != k) reduced.push_back(a.coords[j] / c);
    }
    // D_k = (1/c) * density of the renormalized sum at a_k'/2.
    const double d = irwin_hall_density(reduced, 0.5 * a.coords[k] / c) / c;
    sum += c * d;
  }
  return 2.0 * sum;
}

McEstimate mc_complex_section(const Direction& a, std::int64_t samples,
                              double eps, std::uint64_t seed) {
  if (a.field != Field::complex) {
    throw std::invalid_argument("mc_complex_section needs a complex direction");
  }
  if (samples <= 0 || eps <= 0.0) {
    throw std::invalid_argument("mc_complex_section: bad samples/eps");
  }
  constexpr int kShards = 16;
  const double alpha = 1.0 / std::sqrt(kPi);  // disc radius, unit area
  std::uint64_t mix_state = seed;
  std::int64_t hits = 0;
  const std::int64_t base = samples / kShards;
  const std::int64_t extra = samples % kShards;
  for (int shard = 0; shard < kShards; ++shard) {
    std::mt19937_64 rng(splitmix64(mix_state));
    const std::int64_t count = base + (shard < extra ? 1 : 0);
    for (std::int64_t i = 0; i < count; ++i) {
      double wr = 0.0, wi = 0.0;
      for (double ak : a.coords) {
        const double r = alpha * std::sqrt(uniform01(rng));
        const double th = 2.0 * kPi * uniform01(rng);
        wr += ak * r * std::cos(th);
        wi += ak * r * std::sin(th);
      }
      if (wr * wr + wi * wi < eps * eps) ++hits;
    }
  }
  const double p = (double)hits / (double)samples;
  const double cell = kPi * eps * eps;
  McEstimate est;
  est.value = p / cell;
  est.std_error =
      std::sqrt(std::max(0.0, p * (1.0 - p) / (double)samples)) / cell;
  est.samples = samples;
  est.seed = seed;
  return est;
}

}  // namespace cubeperim::oracle
