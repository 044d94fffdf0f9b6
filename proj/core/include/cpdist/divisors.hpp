#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cpdist {

/**
 * Smallest-prime-factor table for 1..limit.
 *
 * Factoring m takes O(Omega(m)) table lookups; from the factorization all
 * ordered pairs (i, j) with i * j = m are generated in ascending i.
 */
class DivisorSieve {
 public:
  /// Largest limit accepted by build(); beyond it a ResourceError is thrown.
  static constexpr std::uint32_t kMaxLimit = 200'000'000;

  static DivisorSieve build(std::uint32_t limit);

  std::uint32_t limit() const noexcept { return limit_; }

  /// Smallest prime factor of m; spf(1) == 1.
  std::uint32_t spf(std::uint32_t m) const;

  /// Prime factorization of m as (prime, exponent) pairs, ascending primes.
  std::vector<std::pair<std::uint32_t, unsigned>> factorize(std::uint32_t m) const;

  /// (a1 + 1) ... (ar + 1) for m = z1^a1 ... zr^ar.
  std::uint32_t divisor_count(std::uint32_t m) const;

  /// Divisors of m in ascending order, written into `out` (cleared first).
  void divisors(std::uint32_t m, std::vector<std::uint32_t>& out) const;

  /// Every ordered pair (i, m / i), ascending in i.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factor_pairs(std::uint32_t m) const;

 private:
  explicit DivisorSieve(std::vector<std::uint32_t> spf);
  void check(std::uint32_t m) const;

  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
};

}  // namespace cpdist
