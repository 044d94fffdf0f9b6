#include <cmath>
#include <random>

#include "cpdist/alaw.hpp"
#include "cpdist/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cpdist;

namespace {

std::vector<ALaw> sample_laws(std::mt19937_64& rng, int per_family, bool finite_mean_only) {
  std::uniform_real_distribution<double> unit(0.02, 0.98);
  std::uniform_int_distribution<int> count(1, 8);
  std::vector<ALaw> laws;
  for (int i = 0; i < per_family; ++i) {
    laws.push_back(ALaw::poisson(unit(rng) * (finite_mean_only ? 1.0 : 3.0)));
    const int n = count(rng);
    laws.push_back(ALaw::binomial(n, finite_mean_only ? unit(rng) / n : unit(rng)));
    const int r = count(rng);
    // r (1 - p) / p < 1  <=>  p > r / (r + 1)
    const double lo = finite_mean_only ? static_cast<double>(r) / (r + 1) : 0.0;
    laws.push_back(ALaw::negbinomial(r, lo + (1.0 - lo) * unit(rng)));
    laws.push_back(ALaw::geometric(finite_mean_only ? 0.5 + 0.5 * unit(rng) : unit(rng)));
  }
  return laws;
}

}  // namespace

TEST_CASE("pmf examples") {
  CHECK(ALaw::poisson(0.5).pmf(0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
  CHECK(ALaw::binomial(1, 0.3).pmf(1) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(ALaw::geometric(0.7).pmf(2) == doctest::Approx(0.063).epsilon(1e-14));
  CHECK(ALaw::binomial(3, 0.3).pmf(4) == 0.0);
}

TEST_CASE("geometric(0.7) has mean (1-p)/p by direct summation") {
  const ALaw g = ALaw::geometric(0.7);
  double mean = 0.0;
  for (std::uint64_t k = 0; k < 400; ++k) mean += static_cast<double>(k) * g.pmf(k);
  CHECK(mean == doctest::Approx(3.0 / 7.0).epsilon(1e-13));
  CHECK(g.mean() == doctest::Approx(3.0 / 7.0).epsilon(1e-15));
}

TEST_CASE("raw moment examples") {
  for (const ALaw& law : {ALaw::poisson(0.3), ALaw::binomial(4, 0.2), ALaw::negbinomial(2, 0.8),
                          ALaw::geometric(0.6)}) {
    CHECK(law.raw_moment(0) == 1.0);
  }
  const ALaw po = ALaw::poisson(0.3);
  CHECK(po.raw_moment(2) == doctest::Approx(0.39).epsilon(1e-14));
  CHECK(po.raw_moment(3) == doctest::Approx(0.597).epsilon(1e-14));
  CHECK(oracle::truncated_moment(po, 2, 200) == doctest::Approx(0.39).epsilon(1e-13));
  CHECK(oracle::truncated_moment(po, 3, 200) == doctest::Approx(0.597).epsilon(1e-13));
}

TEST_CASE("stirling numbers of the second kind") {
  CHECK(stirling2(0, 0) == 1.0);
  CHECK(stirling2(4, 2) == 7.0);
  CHECK(stirling2(5, 3) == 25.0);
  CHECK(stirling2(6, 6) == 1.0);
  CHECK(stirling2(3, 4) == 0.0);
}

TEST_CASE("raw moments agree with truncated summation for finite-mean laws") {
  std::mt19937_64 rng(20240611);
  for (const ALaw& law : sample_laws(rng, 10, true)) {
    CAPTURE(law.describe());
    for (unsigned m = 1; m <= 6; ++m) {
      CAPTURE(m);
      const double exact = law.raw_moment(m);
      const double summed = oracle::truncated_moment(law, m, 500);
      CHECK(std::abs(exact - summed) <= 1e-10 * std::max(1.0, std::abs(exact)));
    }
  }
}

TEST_CASE("pmf is normalised and matches the closed-form mean") {
  std::mt19937_64 rng(7);
  for (const ALaw& law : sample_laws(rng, 10, false)) {
    CAPTURE(law.describe());
    double total = 0.0;
    double mean = 0.0;
    std::uint64_t k = 0;
    // Walk until past the mean and the remaining mass is negligible.
    for (; k < 200000; ++k) {
      const double v = law.pmf(k);
      CHECK(v >= 0.0);
      total += v;
      mean += static_cast<double>(k) * v;
      if (static_cast<double>(k) > 10 * law.mean() + 50 && v < 1e-18) break;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(law.raw_moment(1) == doctest::Approx(law.mean()).epsilon(1e-12));
    CHECK(mean == doctest::Approx(law.mean()).epsilon(1e-9));
  }
}

TEST_CASE("pmf matches the oracle formulas and the table helper") {
  std::mt19937_64 rng(99);
  for (const ALaw& law : sample_laws(rng, 5, false)) {
    CAPTURE(law.describe());
    const auto table = law.pmf_table(60);
    for (std::uint64_t k = 0; k < 60; ++k) {
      const double ref = oracle::pmf(law, k);
      CHECK(law.pmf(k) == doctest::Approx(ref).epsilon(1e-11));
      CHECK(table[k] == law.pmf(k));
    }
  }
}

TEST_CASE("p0 and p1 are positive for admissible parameters") {
  std::mt19937_64 rng(3);
  for (const ALaw& law : sample_laws(rng, 25, false)) {
    CHECK(law.pmf(0) > 0.0);
    CHECK(law.pmf(1) > 0.0);
  }
}

TEST_CASE("parameter domain errors") {
  CHECK_THROWS_AS(ALaw::poisson(0.0), ParameterError);
  CHECK_THROWS_AS(ALaw::poisson(-1.0), ParameterError);
  CHECK_THROWS_AS(ALaw::poisson(NAN), ParameterError);
  CHECK_THROWS_AS(ALaw::poisson(800.0), ParameterError);  // exp(-800) underflows
  CHECK_THROWS_AS(ALaw::binomial(0, 0.5), ParameterError);
  CHECK_THROWS_AS(ALaw::binomial(2, 1.0), ParameterError);
  CHECK_THROWS_AS(ALaw::binomial(2, 0.0), ParameterError);
  CHECK_THROWS_AS(ALaw::negbinomial(0, 0.5), ParameterError);
  CHECK_THROWS_AS(ALaw::negbinomial(3, 1.5), ParameterError);
  CHECK_THROWS_AS(ALaw::geometric(1.0), ParameterError);
}

TEST_CASE("family names round-trip") {
  for (Family f : kAllFamilies) CHECK(parse_family(family_name(f)) == f);
  CHECK(family_name(Family::NegBinomial) == "negbinomial");
  CHECK_THROWS_AS(parse_family("pareto"), ParameterError);
  CHECK(free_parameters(Family::Poisson) == 1);
  CHECK(free_parameters(Family::Binomial) == 2);
  CHECK(free_parameters(Family::NegBinomial) == 2);
  CHECK(free_parameters(Family::Geometric) == 1);
}
