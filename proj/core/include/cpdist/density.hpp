#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cpdist/alaw.hpp"
#include "cpdist/divisors.hpp"

namespace cpdist {

/// Largest truncation point accepted by the density engine.
inline constexpr std::uint32_t kMaxDensityLimit = 50'000'000;

/// Largest truncation point accepted by the enumeration oracle.
inline constexpr std::uint32_t kMaxBruteforceLimit = 14;

/**
 * Truncated density of X on {1, ..., limit}.
 *
 * X is supported on the positive integers with P(X=1) = P(A=0).
 */
class CpDensity {
 public:
  CpDensity(ALaw law, std::vector<double> probs, std::uint64_t work);

  const ALaw& law() const noexcept { return law_; }
  std::uint32_t limit() const noexcept { return static_cast<std::uint32_t>(probs_.size() - 1); }

  /// P(X = n) for 1 <= n <= limit; throws RangeError otherwise.
  double prob(std::uint32_t n) const;

  /// P(X = 1), ..., P(X = limit).
  std::span<const double> probs() const noexcept { return {probs_.data() + 1, probs_.size() - 1}; }

  /// 1 - sum of probs(), clamped at zero.
  double tail_mass() const noexcept { return tail_mass_; }

  /// Pair visits for the recursion; visited chain states for the oracle.
  std::uint64_t work() const noexcept { return work_; }

 private:
  ALaw law_;
  std::vector<double> probs_;  // probs_[0] unused
  double tail_mass_;
  std::uint64_t work_;
};

struct DensityOptions {
#ifdef CPDIST_COMPENSATED_SUM
  bool compensated = true;
#else
  bool compensated = false;
#endif
};

/**
 * Reusable density evaluator: owns a divisor sieve so repeated evaluations
 * (likelihood optimization, parameter sweeps) factor each m only once per
 * evaluation without rebuilding the table.
 */
class DensityEngine {
 public:
  /// With `precompute_divisors`, divisor lists of 1..max_limit-1 are stored
  /// once (about 4 * max_limit * ln(max_limit) bytes) instead of regenerated
  /// from the sieve on every evaluation.
  explicit DensityEngine(std::uint32_t max_limit, bool precompute_divisors = false);

  std::uint32_t max_limit() const noexcept { return sieve_.limit() + 1; }
  const DivisorSieve& sieve() const noexcept { return sieve_; }

  /// P(X=n), n = 1..limit, from P(X=1) = p0 and
  /// P(X=n) = sum over i*j = n-1 of P(A=i) P(X=j), summed in ascending i.
  CpDensity compute(const ALaw& law, std::uint32_t limit, DensityOptions options = {}) const;

  /// Same recursion on an explicit pmf vector for A (pmf[k] = P(A=k); missing entries are 0).
  std::vector<double> compute_from_pmf(std::span<const double> pmf, std::uint32_t limit,
                                       DensityOptions options = {},
                                       std::uint64_t* pair_visits = nullptr) const;

 private:
  DivisorSieve sieve_;
  std::vector<std::uint64_t> offsets_;  // CSR index into divisors_, empty unless precomputed
  std::vector<std::uint32_t> divisors_;
};

CpDensity cp_density(const ALaw& law, std::uint32_t limit, DensityOptions options = {});

/// Exhaustive enumeration of terminating chains (a1, ..., ak, 0); limit <= 14.
CpDensity cp_density_bruteforce(const ALaw& law, std::uint32_t limit);

double tail_mass_at(const CpDensity& density);

/// Truncated moment sum_{n <= limit} n^m P(X = n).
double partial_moment(const CpDensity& density, unsigned m);

/// Sum of d(m) for m = 1..limit-1: pair visits of the recursion at `limit`.
std::uint64_t expected_pair_visits(const DivisorSieve& sieve, std::uint32_t limit);

}  // namespace cpdist
