// Acceptance battery: twelve end-to-end criteria, one pass/fail line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "cubeperim/ballfn.hpp"
#include "cubeperim/bpcheck.hpp"
#include "cubeperim/extremal.hpp"
#include "cubeperim/oracle.hpp"
#include "cubeperim/sections.hpp"
#include "cubeperim/specfun.hpp"
#include "cubeperim/verify.hpp"

using namespace cubeperim;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const double kSqrt2 = std::sqrt(2.0);

int failures = 0;

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const clock::time_point start = clock::now();
  return std::chrono::duration<double>(clock::now() - start).count();
}

void report(int idx, const char* what, bool ok, const std::string& detail) {
  std::printf("%s  criterion %02d  %-28s %s\n", ok ? "PASS" : "FAIL", idx,
              what, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool all_pass(const std::vector<VerificationReport>& reports, double* worst) {
  bool ok = !reports.empty();
  *worst = 1e300;
  for (const auto& r : reports) {
    ok = ok && r.pass;
    if (r.margin < *worst) *worst = r.margin;
  }
  return ok;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

void criterion1_oracle_equivalence() {
  const double t0 = now_seconds();
  double worst = 0.0;
  const bool ok = all_pass(verify::run_suite("oracle-equiv", {}), &worst);
  const double dt = now_seconds() - t0;
  report(1, "oracle equivalence", ok && dt <= 120.0,
         fmt("worst margin %.2e, %.1fs", worst, dt));
}

void criterion2_known_constants() {
  bool ok = true;
  double worst = 1e300;
  auto check = [&](double err, double tol) {
    ok = ok && err <= tol;
    if (tol - err < worst) worst = tol - err;
  };
  for (int n = 3; n <= 8; ++n) {
    const auto ar = Direction::a_max(n);
    const auto ac = Direction::a_max(n, Field::complex);
    check(std::abs(section_volume(ar, 0.0) - kSqrt2), 1e-9);
    check(std::abs(section_volume(ac, 0.0) - 2.0), 1e-8);
    check(std::abs(perimeter(ar) - 2.0 * ((n - 2) * kSqrt2 + 1.0)), 1e-7);
    check(std::abs(perimeter(ac) - 2.0 * kPi * (2.0 * (n - 2) + 1.0)), 1e-6);
    for (int k = 1; k <= n; ++k) {
      const double dr = k <= 2 ? 1.0 / kSqrt2 : kSqrt2;
      const double dc = k <= 2 ? 1.0 : 2.0;
      check(std::abs(dk(ar, k) - dr), 1e-8);
      check(std::abs(dk(ac, k) - dc), 1e-8);
    }
  }
  report(2, "known constants", ok, fmt("worst slack %.2e", worst));
}

void criterion3_prop3_prop4() {
  double w3 = 0.0, w4 = 0.0;
  const bool ok3 = all_pass(verify::run_suite("prop3", {}), &w3);
  const bool ok4 = all_pass(verify::run_suite("prop4", {}), &w4);
  report(3, "sum identity / D_k <= A", ok3 && ok4,
         fmt("worst margins %.2e / %.2e", w3, w4));
}

void criterion4_search() {
  const double t0 = now_seconds();
  bool ok = true;
  double worst_margin = 1e300, worst_coord = 0.0;
  for (Field f : {Field::real, Field::complex}) {
    for (int n = 3; n <= 6; ++n) {
      extremal::SearchConfig cfg;
      cfg.n = n;
      cfg.field = f;
      auto rep = extremal::search_max_perimeter(cfg);
      ok = ok && rep.margin >= -1e-6;
      if (rep.margin < worst_margin) worst_margin = rep.margin;
      const auto target = Direction::a_max(n, f);
      for (int k = 0; k < n; ++k) {
        const double dev =
            std::abs(rep.best_direction.coords[k] - target.coords[k]);
        if (dev > worst_coord) worst_coord = dev;
      }
    }
  }
  ok = ok && worst_coord <= 1e-3;
  const double dt = now_seconds() - t0;
  report(4, "perimeter maximizer search", ok && dt <= 600.0,
         fmt("worst margin %.2e, max dev %.1e, %.0fs", worst_margin,
             worst_coord, dt));
}

void criterion5_ball_function() {
  bool ok = std::abs(ballfn::ball_f(2.0) - 1.0) <= 1e-9;
  ok = ok && ballfn::ball_f(9.0 / 4.0) <= 0.977;
  ok = ok && ballfn::ball_f(kSqrt2 + 0.5) <= 1.0199;
  const double cap = std::sqrt(3.0 / kPi);
  double worst_env = 1e300;
  for (double p = 2.25; p <= 50.0 + 1e-9; p += 0.25) {
    const double slack = cap + 1e-9 - ballfn::ball_f(p);
    if (slack < worst_env) worst_env = slack;
  }
  ok = ok && worst_env >= 0.0;
  const auto sp = ballfn::find_special_points();
  ok = ok && sp.p1 > 2.165 && sp.p1 < 2.166;
  ok = ok && sp.p2 > 3.36 && sp.p2 < 3.37;
  ok = ok && sp.p0 > 4.46 && sp.p0 < 4.47;
  const double kos_err = std::abs(ballfn::ball_f(40.0) - ballfn::kos_asymptotic(40.0));
  ok = ok && kos_err <= 5e-5;
  report(5, "ball function", ok,
         fmt("envelope slack %.1e, |f(40)-kos| %.1e", worst_env, kos_err));
}

void criterion6_appendix_pipelines() {
  const auto a = ballfn::appendix_bound_9_4();
  const auto b = ballfn::appendix_bound_sqrt2_half();
  bool ok = a.arch[0] <= 0.91340 && a.arch[1] <= 0.03414 && a.total <= 0.977;
  ok = ok && b.total <= 1.0199;
  double worst_witness = 1e300;
  for (double p = kSqrt2 + 0.5; p <= 9.0 / 4.0 + 1e-9; p += 0.01) {
    const double w = ballfn::convexity_witness(p);
    if (w < worst_witness) worst_witness = w;
  }
  ok = ok && worst_witness >= 0.2;
  report(6, "appendix pipelines", ok,
         fmt("totals %.6f / %.6f, min witness %.3f", a.total, b.total,
             worst_witness));
}

void criterion7_nazarov_podkorytov() {
  // Pointwise domination |sinc| <= exp(-x^2/6) on (0, pi).
  bool ok = true;
  for (int i = 1; i < 10000; ++i) {
    const double x = kPi * i / 10000.0;
    if (std::abs(specfun::sinc(x)) > std::exp(-x * x / 6.0) + 1e-14) ok = false;
  }
  // Single sign change of H - G on a log grid in (0, 1).
  int changes = 0, prev = 0;
  for (int i = 0; i < 10000; ++i) {
    const double y = std::exp(std::log(1e-3) +
                              (std::log(1.0 - 1e-3) - std::log(1e-3)) * i / 9999.0);
    const auto c = ballfn::np_compare(y);
    const double d = c.H - c.G;
    const int s = d > 0 ? 1 : (d < 0 ? -1 : 0);
    if (s != 0 && prev != 0 && s != prev) ++changes;
    if (s != 0) prev = s;
  }
  ok = ok && changes == 1;
  // Crossing-point table.
  const double rows[3][3] = {{kSqrt2 + 0.5, 1.8205, 0.5323},
                             {2.0, 1.7863, 0.5469},
                             {9.0 / 4.0, 1.6965, 0.5848}};
  double worst = 0.0;
  for (const auto& r : rows) {
    const auto c = ballfn::crossing_point(r[0]);
    worst = std::max({worst, std::abs(c.x - r[1]), std::abs(c.y - r[2])});
  }
  ok = ok && worst <= 5e-4;
  report(7, "distribution comparison", ok,
         fmt("sign changes %.0f, table dev %.1e", (double)changes, worst));
}

void criterion8_lemma10_grid() {
  const double lo1 = 0.7095, hi1 = 0.7149;
  const double lo2 = 1.0 / std::sqrt(10.0), hi2 = 0.5803;
  double worst = 1e300;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double a1 = lo1 + (hi1 - lo1) * i / 19.0;
      const double a2 = lo2 + (hi2 - lo2) * j / 19.0;
      const double slack = 0.985 * kSqrt2 - extremal::lemma10_check(a1, a2);
      if (slack < worst) worst = slack;
    }
  }
  report(8, "two-weight power integral", worst >= 0.0,
         fmt("min slack %.4f", worst));
}

void criterion9_interpolation() {
  double worst = 0.0;
  const bool sweeps = all_pass(verify::run_suite("lemmas89", {}), &worst);
  const double abar = extremal::interp9_crossing();
  bool ok = sweeps && std::abs(abar - 0.71254) <= 5e-4;
  const auto w5 = extremal::interp9_exception_window(5);
  const auto w6 = extremal::interp9_exception_window(6);
  ok = ok && !w5.empty && std::abs(w5.lo - 0.7095) <= 5e-4 &&
       std::abs(w5.hi - 0.7149) <= 5e-4;
  ok = ok && !w6.empty && std::abs(w6.lo - 0.7115) <= 5e-4 &&
       std::abs(w6.hi - 0.7133) <= 5e-4;
  ok = ok && extremal::interp9_exception_window(7).empty;
  report(9, "interpolation sweeps", ok,
         fmt("abar %.5f, windows (%.5f, %.5f)", abar, w5.lo, w5.hi));
}

void criterion10_lower_bound() {
  double worst = 0.0;
  const bool ok = all_pass(verify::run_suite("prop11", {}), &worst);
  report(10, "perimeter lower bound", ok, fmt("worst margin %.2e", worst));
}

void criterion11_busemann_petty() {
  bool ok = true;
  auto rows = bpcheck::bp_table(3, 200);
  for (size_t i = 1; i < rows.size(); ++i) {
    ok = ok && rows[i].bp < rows[i - 1].bp;
  }
  ok = ok && bpcheck::bp_value(13.0) > 1.0 && bpcheck::bp_value(14.0) < 1.0;
  const double root = bpcheck::bp_root(false);
  ok = ok && std::abs(root - 13.70) <= 0.01;
  const double rootc = bpcheck::bp_root(true);
  ok = ok && rootc > 10.0 && rootc < 11.0;
  ok = ok && bpcheck::bp_complex_value(10.0) > 1.0 &&
       bpcheck::bp_complex_value(11.0) < 1.0;
  report(11, "matched-ball comparison", ok,
         fmt("roots %.4f / %.4f", root, rootc));
}

void criterion12_monte_carlo() {
  const double t0 = now_seconds();
  std::mt19937_64 rng(0xC0FFEEull);
  std::normal_distribution<double> gauss(0.0, 1.0);
  bool ok = true;
  double worst_sigmas = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + trial % 3;  // n in {3, 4, 5}
    std::vector<double> c(n);
    for (double& x : c) x = std::abs(gauss(rng));
    const auto a = Direction::canonicalize(std::move(c), Field::complex);
    const double quad = section_volume(a, 0.0);
    const auto mc =
        oracle::mc_complex_section(a, 10000000, 0.01, 1000 + trial);
    const double sigmas = std::abs(mc.value - quad) / mc.std_error;
    if (sigmas > worst_sigmas) worst_sigmas = sigmas;
    ok = ok && sigmas <= 3.0;
  }
  const double dt = now_seconds() - t0;
  report(12, "monte carlo cross-check", ok && dt <= 300.0,
         fmt("worst deviation %.2f sigma, %.0fs", worst_sigmas, dt));
}

}  // namespace

int main() {
  criterion1_oracle_equivalence();
  criterion2_known_constants();
  criterion3_prop3_prop4();
  criterion4_search();
  criterion5_ball_function();
  criterion6_appendix_pipelines();
  criterion7_nazarov_podkorytov();
  criterion8_lemma10_grid();
  criterion9_interpolation();
  criterion10_lower_bound();
  criterion11_busemann_petty();
  criterion12_monte_carlo();
  std::printf("%s: %d of 12 criteria failed\n",
              failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures;
}
