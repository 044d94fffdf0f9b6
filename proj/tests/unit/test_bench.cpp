#include <sstream>

#include "cpdist/bench.hpp"
#include "cpdist/density.hpp"
#include "cpdist/errors.hpp"
#include "cpdist/export.hpp"
#include "doctest.h"

using namespace cpdist;

TEST_CASE("recursion report records divisor-sum pair visits") {
  const std::uint32_t limits[] = {1, 10, 1000, 10000};
  const auto report = bench_density(ALaw::poisson(0.5), limits);
  REQUIRE(report.rows.size() == 4);
  const auto sieve = DivisorSieve::build(10000);
  for (const auto& row : report.rows) {
    CHECK(row.work == expected_pair_visits(sieve, row.limit));
    CHECK(row.seconds >= 0.0);
  }
  CHECK(report.rows[0].work == 0);
}

TEST_CASE("single-point report") {
  const std::uint32_t limits[] = {1};
  CHECK(bench_density(ALaw::poisson(0.5), limits).rows.size() == 1);
}

TEST_CASE("limits must increase") {
  const std::uint32_t limits[] = {100, 100};
  CHECK_THROWS_AS(bench_density(ALaw::poisson(0.5), limits), RangeError);
}

TEST_CASE("brute-force report grows with the limit") {
  const std::uint32_t limits[] = {6, 8, 10, 12};
  const auto report = bench_bruteforce(ALaw::poisson(0.5), limits);
  for (std::size_t i = 1; i < report.rows.size(); ++i) CHECK(report.rows[i].work > report.rows[i - 1].work);
  std::ostringstream csv;
  write_bench_csv(csv, report);
  CHECK(csv.str().rfind("limit,seconds,pair_visits,method\n6,", 0) == 0);
  CHECK(csv.str().find(",bruteforce\n") != std::string::npos);
}
