#include <doctest.h>

#include <numeric>

#include "divdfa/verify.hpp"

using namespace divdfa;

TEST_SUITE("verify") {

TEST_CASE("small sweep passes") {
  SweepConfig config;
  config.base_lo = 2;
  config.base_hi = 6;
  config.modulus_lo = 1;
  config.modulus_hi = 80;
  const SweepReport report = run_verify_sweep(config);
  CHECK(report.pass());
  CHECK(report.checked == 5 * 80);
  CHECK(report.render().find("0 failures") != std::string::npos);
}

TEST_CASE("canonical minimality flags for base 2 up to k=64") {
  SweepConfig config;
  config.base_lo = 2;
  config.base_hi = 2;
  config.modulus_lo = 1;
  config.modulus_hi = 64;
  const SweepReport report = run_verify_sweep(config);
  REQUIRE(report.pass());
  for (const PairResult& r : report.results) {
    const bool expected = std::gcd(r.modulus, r.base) == 1 || r.modulus == 2;
    CHECK(r.canonical_minimal == expected);
    CHECK(r.canonical_minimal == (r.f == r.modulus));
  }
}

TEST_CASE("report bytes do not depend on the worker count") {
  SweepConfig config;
  config.base_lo = 2;
  config.base_hi = 5;
  config.modulus_lo = 1;
  config.modulus_hi = 60;
  config.jobs = 1;
  const std::string serial = run_verify_sweep(config).render();
  config.jobs = 8;
  const std::string parallel = run_verify_sweep(config).render();
  CHECK(serial == parallel);
}

TEST_CASE("invalid configurations are rejected") {
  SweepConfig empty;
  empty.base_lo = 4;
  empty.base_hi = 3;
  CHECK_THROWS_AS(run_verify_sweep(empty), std::invalid_argument);

  SweepConfig bad_base;
  bad_base.base_lo = 1;
  bad_base.base_hi = 2;
  CHECK_THROWS_AS(run_verify_sweep(bad_base), std::invalid_argument);

  SweepConfig no_jobs;
  no_jobs.jobs = 0;
  CHECK_THROWS_AS(run_verify_sweep(no_jobs), std::invalid_argument);
}

TEST_CASE("fail-fast changes nothing on a passing sweep") {
  SweepConfig config;
  config.base_lo = 3;
  config.base_hi = 3;
  config.modulus_lo = 1;
  config.modulus_hi = 30;
  const std::string plain = run_verify_sweep(config).render();
  config.fail_fast = true;
  CHECK(run_verify_sweep(config).render() == plain);
}

}  // TEST_SUITE
