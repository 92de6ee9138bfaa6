#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "cubeperim/verify.hpp"

using namespace cubeperim;
using namespace cubeperim::verify;

namespace {
SuiteOptions small() {
  SuiteOptions opt;
  opt.n_min = 3;
  opt.n_max = 5;
  opt.samples = 5;
  opt.seed = 7;
  return opt;
}
}  // namespace

TEST_CASE("every suite passes on a reduced sample") {
  for (const auto& name : suite_names()) {
    if (name == "all") continue;
    CAPTURE(name);
    auto reports = run_suite(name, small());
    CHECK(!reports.empty());
    for (const auto& r : reports) {
      CAPTURE(r.name);
      CAPTURE(r.inputs);
      CAPTURE(r.margin);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("reports carry coherent pass/margin semantics") {
  for (const auto& r : run_suite("prop3", small())) {
    CHECK(r.pass == (r.margin >= -r.tolerance));
  }
}

TEST_CASE("runs are deterministic for a fixed seed") {
  auto a = run_suite("prop4", small());
  auto b = run_suite("prop4", small());
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].computed == b[i].computed);
    CHECK(a[i].margin == b[i].margin);
  }
  SuiteOptions other = small();
  other.seed = 8;
  auto c = run_suite("prop4", other);
  bool any_diff = false;
  for (size_t i = 0; i < std::min(a.size(), c.size()); ++i) {
    if (a[i].computed != c[i].computed) any_diff = true;
  }
  CHECK(any_diff);
}

TEST_CASE("unknown suite names are rejected") {
  CHECK_THROWS_AS(run_suite("bogus", small()), std::invalid_argument);
}
