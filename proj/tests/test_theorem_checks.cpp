#include <doctest.h>

#include "crosscut/error.hpp"
#include "crosscut/theorem_checks.hpp"

using namespace crosscut;

TEST_CASE("every property suite passes on a small run") {
  CheckOptions options;
  options.seeds = 120;
  options.max_size = 8;
  const auto results = run_theorem_checks(options);
  CHECK(results.size() == 12);
  for (const auto& r : results) {
    CAPTURE(r.id);
    CAPTURE(r.failure);
    CHECK(r.passed);
    CHECK(r.cases > 0);
    CHECK(r.failure.empty());
  }
}

TEST_CASE("property suites are reproducible per seed") {
  CheckOptions options;
  options.seeds = 20;
  options.max_size = 6;
  const auto a = run_theorem_checks(options);
  const auto b = run_theorem_checks(options);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].cases == b[i].cases);
}

TEST_CASE("property suites reject bad options") {
  CheckOptions options;
  options.max_size = 0;
  CHECK_THROWS_AS(run_theorem_checks(options), BadParams);
  options.max_size = 8;
  options.seeds = -1;
  CHECK_THROWS_AS(run_theorem_checks(options), BadParams);
}
