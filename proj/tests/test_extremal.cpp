#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "cubeperim/extremal.hpp"

using namespace cubeperim;
using namespace cubeperim::extremal;

namespace {
const double kSqrt2 = std::sqrt(2.0);
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("real search recovers a_max") {
  for (int n : {3, 5}) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.multistarts = 12;
    auto rep = search_max_perimeter(cfg);
    CHECK(rep.target_value ==
          doctest::Approx(2.0 * ((n - 2) * kSqrt2 + 1.0)).epsilon(1e-12));
    CHECK(rep.margin >= -1e-6);
    CHECK(rep.margin <= 1e-6);
    for (int k = 0; k < n; ++k) {
      const double want = k < 2 ? 1.0 / kSqrt2 : 0.0;
      CHECK(std::abs(rep.best_direction.coords[k] - want) < 1e-3);
    }
    CHECK(rep.evaluations > 0);
  }
}

TEST_CASE("complex search recovers a_max (n=3)") {
  SearchConfig cfg;
  cfg.n = 3;
  cfg.field = Field::complex;
  cfg.multistarts = 4;
  auto rep = search_max_perimeter(cfg);
  CHECK(rep.target_value == doctest::Approx(2.0 * kPi * 3.0).epsilon(1e-12));
  CHECK(rep.margin >= -1e-6);
  CHECK(std::abs(rep.best_direction.coords[0] - 1.0 / kSqrt2) < 1e-3);
  CHECK(std::abs(rep.best_direction.coords[2]) < 1e-3);
}

TEST_CASE("search config validation") {
  SearchConfig bad;
  bad.n = 2;
  CHECK_THROWS_AS(search_max_perimeter(bad), std::invalid_argument);
}

TEST_CASE("perimeter lower bound on random directions") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int n = 3; n <= 5; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<double> c(n);
      for (double& x : c) x = std::abs(gauss(rng));
      auto rep = check_lower_bound(Direction::canonicalize(c, Field::real));
      CHECK(rep.pass);
      CHECK(rep.bound == doctest::Approx(2.0 * (n - 2)).epsilon(1e-12));
    }
  }
  auto repc = check_lower_bound(
      Direction::canonicalize({0.8, 0.5, 0.33}, Field::complex));
  CHECK(repc.pass);
  CHECK(repc.bound == doctest::Approx(2.0 * kPi).epsilon(1e-12));
}

TEST_CASE("lemma 10 box bound holds at the corners and rejects outside") {
  const double lo1 = 0.7095, hi1 = 0.7149;
  const double lo2 = 1.0 / std::sqrt(10.0), hi2 = 0.5803;
  for (double a1 : {lo1, hi1}) {
    for (double a2 : {lo2, hi2}) {
      CHECK(lemma10_check(a1, a2) <= 0.985 * kSqrt2);
    }
  }
  CHECK_THROWS_AS(lemma10_check(0.6, 0.4), std::domain_error);
  CHECK_THROWS_AS(lemma10_check(0.71, 0.7), std::domain_error);
}

TEST_CASE("interpolation endpoint identity and sweeps") {
  for (int n : {5, 6, 7, 8}) {
    const double s = 1.0 / kSqrt2;
    CHECK(interp8_gamma(n, s, s) * kSqrt2 ==
          doctest::Approx((n - 2) * kSqrt2 + 1.0).epsilon(1e-9));
    auto rep = interpolation_sweep(n);
    CHECK(rep.pass);
  }
}

TEST_CASE("one-variable branch crossing and exception windows") {
  const double abar = interp9_crossing();
  CHECK(std::abs(abar - 0.71254) < 5e-4);
  // Defining equation psi2(a1) sqrt2 = 1/a1.
  CHECK(interp9_psi2(abar) * kSqrt2 ==
        doctest::Approx(1.0 / abar).epsilon(1e-9));
  auto w5 = interp9_exception_window(5);
  auto w6 = interp9_exception_window(6);
  auto w7 = interp9_exception_window(7);
  REQUIRE_FALSE(w5.empty);
  REQUIRE_FALSE(w6.empty);
  CHECK(w7.empty);
  CHECK(w5.lo == doctest::Approx(0.7095).epsilon(5e-4));
  CHECK(w5.hi == doctest::Approx(0.7149).epsilon(5e-4));
  CHECK(w6.lo == doctest::Approx(0.7115).epsilon(5e-4));
  CHECK(w6.hi == doctest::Approx(0.7133).epsilon(5e-4));
  CHECK(w6.lo > w5.lo);  // n=6 window is strictly inside the n=5 one
  CHECK(w6.hi < w5.hi);
  CHECK(w5.max_excess > w6.max_excess);
}

TEST_CASE("a2 thresholds near the printed values") {
  CHECK(std::abs(interp9_a2_threshold(5) - 0.5803) < 1e-3);
  CHECK(std::abs(interp9_a2_threshold(6) - 0.4952) < 1e-3);
}

TEST_CASE("phi helpers: anchor values") {
  // phi2 interpolates |sinc|-power bounds between t=2/3 and t=1 anchors.
  CHECK(interp_phi2(1.0) ==
        doctest::Approx(5.0 - 4.0 * std::sqrt(3.0 / kPi)).epsilon(1e-12));
  CHECK(interp_phi1(1.0 / kSqrt2) > 0.0);
}
