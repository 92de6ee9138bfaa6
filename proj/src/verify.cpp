#include "cubeperim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cubeperim/ballfn.hpp"
#include "cubeperim/extremal.hpp"
#include "cubeperim/oracle.hpp"
#include "cubeperim/sections.hpp"
#include "cubeperim/specfun.hpp"

namespace cubeperim::verify {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3OverPi = std::sqrt(3.0 / kPi);

std::string dir_string(const Direction& a) {
  std::ostringstream os;
  os.precision(6);
  os << (a.field == Field::real ? "real" : "complex") << " (";
  for (int k = 0; k < a.n(); ++k) os << (k ? "," : "") << a.coords[k];
  os << ")";
  return os.str();
}

std::mt19937_64 suite_rng(const SuiteOptions& opt, int n, unsigned salt) {
  return std::mt19937_64(opt.seed * 0x9E3779B97F4A7C15ull + n * 0x100000001B3ull +
                         salt);
}

std::vector<Direction> random_directions(const SuiteOptions& opt, int n,
                                         int count, Field field,
                                         unsigned salt) {
  std::mt19937_64 rng = suite_rng(opt, n, salt);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Direction> dirs;
  dirs.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::vector<double> c(n);
    bool ok = false;
    while (!ok) {
      double norm2 = 0.0;
      for (double& v : c) {
        v = gauss(rng);
        norm2 += v * v;
      }
      ok = norm2 > 1e-6;
    }
    dirs.push_back(Direction::canonicalize(c, field));
  }
  return dirs;
}

// Track the worst margin over a sample and emit one report for it.
struct Worst {
  double margin = 1e300;
  double computed = 0.0;
  double bound = 0.0;
  std::string inputs = "n/a";

  void update(double m, double comp, double bnd, const std::string& in) {
    if (m < margin) {
      margin = m;
      computed = comp;
      bound = bnd;
      inputs = in;
    }
  }
  VerificationReport report(const std::string& name, double tol) const {
    return make_report(name, inputs, computed, bound, margin, tol);
  }
};

int complex_cap(int samples) { return std::min(samples, 5); }

}  // namespace

std::vector<VerificationReport> suite_prop3(const SuiteOptions& opt) {
  std::vector<VerificationReport> out;
  for (int n = opt.n_min; n <= opt.n_max; ++n) {
    for (Field field : {Field::real, Field::complex}) {
      const int count =
          field == Field::real ? opt.samples : complex_cap(opt.samples);
      Worst w;
      for (const Direction& a : random_directions(opt, n, count, field, 3)) {
        const double A = section_volume(a, 0.0);
        double sum = 0.0;
        for (int k = 1; k <= n; ++k) sum += dk(a, k);
        const double err = std::abs(sum - (n - 1) * A);
        w.update(1e-7 - err, sum, (n - 1) * A, dir_string(a));
      }
      out.push_back(w.report("sum-Dk-identity", 0.0));
    }
  }
  return out;
}

std::vector<VerificationReport> suite_prop4(const SuiteOptions& opt) {
  std::vector<VerificationReport> out;
  for (int n = opt.n_min; n <= opt.n_max; ++n) {
    for (Field field : {Field::real, Field::complex}) {
      const int count =
          field == Field::real ? opt.samples : complex_cap(opt.samples);
      const double upper = field == Field::real ? kSqrt2 : 2.0;
      Worst wd, wlo, whi;
      for (const Direction& a : random_directions(opt, n, count, field, 4)) {
        const double A = section_volume(a, 0.0);
        for (int k = 1; k <= n; ++k) {
          const double d = dk(a, k);
          wd.update(A + 1e-7 - d, d, A, dir_string(a));
        }
        wlo.update(A - (1.0 - 1e-7), A, 1.0, dir_string(a));
        whi.update(upper + 1e-7 - A, A, upper, dir_string(a));
      }
      out.push_back(wd.report("Dk-below-A", 0.0));
      out.push_back(wlo.report("volume-lower-envelope", 0.0));
      out.push_back(whi.report("volume-upper-envelope", 0.0));
    }
  }
  return out;
}

std::vector<VerificationReport> suite_cor5(const SuiteOptions& opt) {
  std::vector<VerificationReport> out;
  const double ts[] = {0.1, 0.5, 1.0, 1.5, 2.0};
  for (int n = opt.n_min; n <= opt.n_max; ++n) {
    for (Field field : {Field::real, Field::complex}) {
      const int count = std::min(opt.samples, field == Field::real ? 10 : 4);
      const int l = field_multiplier(field);
      Worst w;
      for (const Direction& a : random_directions(opt, n, count, field, 5)) {
        for (double t : ts) {
          const double A = section_volume(a, t);
          const double bound = cor5_bound(t, l);
          std::ostringstream in;
          in << dir_string(a) << " t=" << t;
          w.update(bound + 1e-7 - A, A, bound, in.str());
        }
      }
      out.push_back(w.report("offset-section-bound", 0.0));
    }
  }
  return out;
}

std::vector<VerificationReport> suite_thm1(const SuiteOptions& opt) {
  std::vector<VerificationReport> out;
  for (int n = std::max(opt.n_min, 3); n <= opt.n_max; ++n) {
    for (Field field : {Field::real, Field::complex}) {
      const Direction amax = Direction::a_max(n, field);
      const double target = field == Field::real
                                ? 2.0 * ((n - 2) * kSqrt2 + 1.0)
                                : 2.0 * kPi * (2.0 * (n - 2) + 1.0);
      const double P = perimeter(amax);
      const double ptol = field == Field::real ? 1e-7 : 1e-6;
      std::ostringstream in;
      in << "n=" << n << " a_max " << (field == Field::real ? "real" : "complex");
      out.push_back(make_report("perimeter-at-amax", in.str(), P, target,
                                ptol - std::abs(P - target), 0.0));
      // Maximality over the random sample.
      const int count = field == Field::real ? opt.samples
                                             : complex_cap(opt.samples);
      Worst w;
      for (const Direction& a : random_directions(opt, n, count, field, 1)) {
        const double p = field == Field::real ? oracle::perimeter_oracle(a)
                                              : perimeter(a);
        w.update(target + 1e-7 - p, p, target, dir_string(a));
      }
      out.push_back(w.report("perimeter-below-maximum", 0.0));
    }
    // Interpolation chain: for a1 <= 1/sqrt2,
    // P/2 <= (n-1) sqrt(1 - (1-a1^2)/(n-1)) A.
    Worst wc;
    for (const Direction& a :
         random_directions(opt, n, opt.samples, Field::real, 16)) {
      if (a.coords[0] > 1.0 / kSqrt2) continue;
      const double half_p = 0.5 * oracle::perimeter_oracle(a);
      const double A = oracle::section_volume_oracle(a, 0.0);
      const double a1 = a.coords[0];
      const double rhs =
          (n - 1) * std::sqrt(1.0 - (1.0 - a1 * a1) / (n - 1)) * A;
      wc.update(rhs + 1e-7 - half_p, half_p, rhs, dir_string(a));
    }
    out.push_back(wc.report("projection-holder-chain", 0.0));
    // Leftover-window slack: P/2 stays within 2(3 sqrt2/4 - 1) of the target.
    Worst wg;
    const double gap = 2.0 * (0.75 * kSqrt2 - 1.0);
    for (const Direction& a :
         random_directions(opt, n, opt.samples, Field::real, 17)) {
      const double half_p = 0.5 * oracle::perimeter_oracle(a);
      const double cap = (n - 2) * kSqrt2 + 1.0 + gap;
      wg.update(cap + 1e-6 - half_p, half_p, cap, dir_string(a));
    }
    out.push_back(wg.report("window-gap-bound", 0.0));
  }
  return out;
}

std::vector<VerificationReport> suite_ballfn(const SuiteOptions& opt) {
  (void)opt;
  std::vector<VerificationReport> out;
  const double f2 = ballfn::ball_f(2.0);
  out.push_back(make_report("ball-f-at-2", "p=2", f2, 1.0,
                            1e-9 - std::abs(f2 - 1.0), 0.0));
  const double f2c = ballfn::ball_f_complex(2.0);
  out.push_back(make_report("ball-f-complex-at-2", "p=2", f2c, 1.0,
                            1e-8 - std::abs(f2c - 1.0), 0.0));
  const double f94 = ballfn::ball_f(2.25);
  out.push_back(
      make_report("ball-f-9-4", "p=9/4", f94, 0.977, 0.977 - f94, 0.0));
  const double fs = ballfn::ball_f(kSqrt2 + 0.5);
  out.push_back(make_report("ball-f-sqrt2-half", "p=sqrt2+1/2", fs, 1.0199,
                            1.0199 - fs, 0.0));
  {
    Worst w;
    for (double p = 2.25; p <= 50.0 + 1e-9; p += 0.25) {
      std::ostringstream in;
      in << "p=" << p;
      const double f = ballfn::ball_f(p);
      w.update(kSqrt3OverPi + 1e-9 - f, f, kSqrt3OverPi, in.str());
    }
    out.push_back(w.report("ball-f-limit-envelope", 0.0));
  }
  const auto a94 = ballfn::appendix_bound_9_4();
  out.push_back(make_report("arch-bound-I0", "k=0", a94.arch[0], 0.91340,
                            0.91340 - a94.arch[0], 0.0));
  out.push_back(make_report("arch-bound-I1", "k=1", a94.arch[1], 0.03414,
                            0.03414 - a94.arch[1], 0.0));
  out.push_back(make_report("arch-bound-total", "sum+tail", a94.total, 0.977,
                            0.977 - a94.total, 0.0));
  const auto apc = ballfn::appendix_bound_sqrt2_half();
  out.push_back(make_report("piece-bound-total", "head+mid+tail", apc.total,
                            1.0199, 1.0199 - apc.total, 0.0));
  {
    Worst w;
    for (double p = kSqrt2 + 0.5; p <= 2.25 + 1e-9; p += 0.01) {
      std::ostringstream in;
      in << "p=" << p;
      const double h = ballfn::convexity_witness(p);
      w.update(h - 0.2, h, 0.2, in.str());
    }
    out.push_back(w.report("convexity-witness", 0.0));
  }
  const auto sp = ballfn::find_special_points();
  out.push_back(make_report("special-p1", "f = sqrt(3/pi)", sp.p1, 2.1655,
                            5e-4 - std::abs(sp.p1 - 2.1655), 0.0));
  out.push_back(make_report("special-p2", "f' = 0", sp.p2, 3.365,
                            5e-3 - std::abs(sp.p2 - 3.365), 0.0));
  out.push_back(make_report("special-p0", "f'' = 0", sp.p0, 4.465,
                            5e-3 - std::abs(sp.p0 - 4.465), 0.0));
  const double f40 = ballfn::ball_f(40.0);
  const double k40 = ballfn::kos_asymptotic(40.0);
  out.push_back(make_report("kos-asymptotic", "p=40", f40, k40,
                            5e-5 - std::abs(f40 - k40), 0.0));
  return out;
}

std::vector<VerificationReport> suite_np(const SuiteOptions& opt) {
  (void)opt;
  std::vector<VerificationReport> out;
  // |sinc| <= exp(-x^2/6) on (0, pi).
  {
    Worst w;
    for (int i = 1; i < 3000; ++i) {
      const double x = kPi * i / 3000.0;
      const double g = std::abs(specfun::sinc(x));
      const double h = std::exp(-x * x / 6.0);
      std::ostringstream in;
      in << "x=" << x;
      w.update(h - g, g, h, in.str());
    }
    out.push_back(w.report("gaussian-majorant", 0.0));
  }
  // H - G changes sign exactly once on a log-spaced level grid.
  {
    int changes = 0;
    double y0 = 0.0;
    double prev = 0.0;
    bool have_prev = false;
    const int m = 10000;
    const double ylo = 1e-3, yhi = 1.0 - 1e-3;
    for (int i = 0; i < m; ++i) {
      const double y =
          std::exp(std::log(ylo) + (std::log(yhi) - std::log(ylo)) * i / (m - 1));
      const auto cmp = ballfn::np_compare(y);
      const double s = cmp.H - cmp.G;
      if (have_prev && (s > 0.0) != (prev > 0.0)) {
        ++changes;
        y0 = y;
      }
      prev = s;
      have_prev = true;
    }
    std::ostringstream in;
    in << "grid 1e-3..1-1e-3, crossing y0=" << y0;
    out.push_back(make_report("single-sign-change", in.str(), (double)changes,
                              1.0, changes == 1 ? 0.0 : -1.0, 0.0));
  }
  // Crossing-point table.
  const double ps[] = {kSqrt2 + 0.5, 2.0, 2.25};
  const double xs[] = {1.8205, 1.7863, 1.6965};
  const double ys[] = {0.5323, 0.5469, 0.5848};
  for (int i = 0; i < 3; ++i) {
    const auto cp = ballfn::crossing_point(ps[i]);
    std::ostringstream in;
    in << "p=" << ps[i];
    const double err = std::max(std::abs(cp.x - xs[i]), std::abs(cp.y - ys[i]));
    out.push_back(
        make_report("crossing-table-row", in.str(), cp.x, xs[i], 5e-4 - err, 0.0));
  }
  return out;
}

std::vector<VerificationReport> suite_lemma10(const SuiteOptions& opt) {
  (void)opt;
  std::vector<VerificationReport> out;
  oscint::QuadratureSpec spec;
  spec.abs_tol = spec.rel_tol = 1e-7;
  const double bound = 0.985 * kSqrt2;
  Worst w;
  const double a1lo = 0.7095, a1hi = 0.7149;
  const double a2lo = 1.0 / std::sqrt(10.0), a2hi = 0.5803;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double a1 = a1lo + (a1hi - a1lo) * i / 19.0;
      const double a2 = a2lo + (a2hi - a2lo) * j / 19.0;
      const double v = extremal::lemma10_check(a1, a2, spec);
      std::ostringstream in;
      in << "(a1,a2)=(" << a1 << "," << a2 << ")";
      w.update(bound - v, v, bound, in.str());
    }
  }
  out.push_back(w.report("two-weight-power-integral", 0.0));
  return out;
}

std::vector<VerificationReport> suite_lemmas89(const SuiteOptions& opt) {
  std::vector<VerificationReport> out;
  for (int n = std::max(4, opt.n_min); n <= std::max(8, opt.n_max); ++n) {
    out.push_back(extremal::interpolation_sweep(n));
  }
  const double abar = extremal::interp9_crossing();
  out.push_back(make_report("crossing-abar", "psi sqrt2 = 1/a1", abar, 0.71254,
                            5e-4 - std::abs(abar - 0.71254), 0.0));
  const double t5 = extremal::interp9_a2_threshold(5);
  const double t6 = extremal::interp9_a2_threshold(6);
  out.push_back(make_report("a2-threshold-n5", "refined bound", t5, 0.5803,
                            1e-3 - std::abs(t5 - 0.5803), 0.0));
  out.push_back(make_report("a2-threshold-n6", "refined bound", t6, 0.4952,
                            1e-3 - std::abs(t6 - 0.4952), 0.0));
  return out;
}

std::vector<VerificationReport> suite_prop11(const SuiteOptions& opt) {
  std::vector<VerificationReport> out;
  for (int n = opt.n_min; n <= opt.n_max; ++n) {
    for (Field field : {Field::real, Field::complex}) {
      const int count =
          field == Field::real ? opt.samples : complex_cap(opt.samples);
      Worst w;
      for (const Direction& a : random_directions(opt, n, count, field, 11)) {
        const auto r = extremal::check_lower_bound(a);
        w.update(r.margin, r.computed, r.bound, r.inputs);
      }
      out.push_back(w.report("perimeter-lower-bound", 1e-6));
    }
  }
  return out;
}

std::vector<VerificationReport> suite_oracle_equiv(const SuiteOptions& opt) {
  std::vector<VerificationReport> out;
  for (int n = opt.n_min; n <= opt.n_max; ++n) {
    Worst wa, wp;
    std::mt19937_64 rng = suite_rng(opt, n, 42);
    std::uniform_real_distribution<double> unif(0.0, 1.5);
    for (const Direction& a :
         random_directions(opt, n, opt.samples, Field::real, 42)) {
      const double t = unif(rng);
      const double quad = section_volume(a, t);
      const double exact = oracle::section_volume_oracle(a, t);
      std::ostringstream in;
      in << dir_string(a) << " t=" << t;
      wa.update(1e-8 - std::abs(quad - exact), quad, exact, in.str());
      const double pq = perimeter(a);
      const double po = oracle::perimeter_oracle(a);
      wp.update(1e-7 - std::abs(pq - po), pq, po, dir_string(a));
    }
    out.push_back(wa.report("volume-vs-density", 0.0));
    out.push_back(wp.report("perimeter-vs-density", 0.0));
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "prop3",   "prop4",    "cor5",   "thm1",   "ballfn", "np",
      "lemma10", "lemmas89", "prop11", "oracle-equiv", "all"};
  return names;
}

std::vector<VerificationReport> run_suite(const std::string& name,
                                          const SuiteOptions& opt) {
  if (name == "prop3") return suite_prop3(opt);
  if (name == "prop4") return suite_prop4(opt);
  if (name == "cor5") return suite_cor5(opt);
  if (name == "thm1") return suite_thm1(opt);
  if (name == "ballfn") return suite_ballfn(opt);
  if (name == "np") return suite_np(opt);
  if (name == "lemma10") return suite_lemma10(opt);
  if (name == "lemmas89") return suite_lemmas89(opt);
  if (name == "prop11") return suite_prop11(opt);
  if (name == "oracle-equiv") return suite_oracle_equiv(opt);
  if (name == "all") {
    std::vector<VerificationReport> out;
    for (const std::string& s : suite_names()) {
      if (s == "all") continue;
      auto part = run_suite(s, opt);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace cubeperim::verify
