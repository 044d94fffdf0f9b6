#include "cpdist/divisors.hpp"
#include "cpdist/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cpdist;

TEST_CASE("smallest prime factors up to 10") {
  const auto sieve = DivisorSieve::build(10);
  const std::uint32_t expected[] = {0, 1, 2, 3, 2, 5, 2, 7, 2, 3, 2};
  for (std::uint32_t m = 1; m <= 10; ++m) CHECK(sieve.spf(m) == expected[m]);
}

TEST_CASE("degenerate sieve") {
  const auto sieve = DivisorSieve::build(1);
  CHECK(sieve.limit() == 1);
  CHECK(sieve.spf(1) == 1);
  CHECK(sieve.factor_pairs(1) == std::vector<std::pair<std::uint32_t, std::uint32_t>>{{1, 1}});
  CHECK_THROWS_AS(DivisorSieve::build(0), RangeError);
}

TEST_CASE("factor pairs") {
  const auto sieve = DivisorSieve::build(12);
  CHECK(sieve.factor_pairs(4) == std::vector<std::pair<std::uint32_t, std::uint32_t>>{{1, 4}, {2, 2}, {4, 1}});
  CHECK(sieve.factor_pairs(12).size() == 6);
  CHECK(sieve.divisor_count(12) == 6);  // 12 = 2^2 3 -> (2+1)(1+1)
  const auto f = sieve.factorize(12);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == std::pair<std::uint32_t, unsigned>{2, 2});
  CHECK(f[1] == std::pair<std::uint32_t, unsigned>{3, 1});
}

TEST_CASE("out of range queries") {
  const auto sieve = DivisorSieve::build(12);
  CHECK_THROWS_AS(sieve.factor_pairs(13), RangeError);
  CHECK_THROWS_AS(sieve.factor_pairs(0), RangeError);
  CHECK_THROWS_AS(sieve.spf(100), RangeError);
  CHECK_THROWS_AS(DivisorSieve::build(DivisorSieve::kMaxLimit + 1), ResourceError);
}

TEST_CASE("sieve agrees with trial division up to 10000") {
  const std::uint32_t limit = 10000;
  const auto sieve = DivisorSieve::build(limit);
  std::vector<std::uint32_t> divs;
  for (std::uint32_t m = 1; m <= limit; ++m) {
    CAPTURE(m);
    if (m >= 2) {
      const std::uint32_t z = sieve.spf(m);
      REQUIRE(oracle::is_prime(z));
      REQUIRE(m % z == 0);
      for (std::uint32_t q = 2; q < z; ++q) REQUIRE(m % q != 0);
    }
    const auto expected = oracle::trial_divisors(m);
    sieve.divisors(m, divs);
    REQUIRE(divs == expected);
    REQUIRE(sieve.divisor_count(m) == expected.size());
    const auto pairs = sieve.factor_pairs(m);
    REQUIRE(pairs.size() == expected.size());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      REQUIRE(pairs[k].first * pairs[k].second == m);
      REQUIRE(pairs[k].first == expected[k]);
    }
  }
}
