#include "cpdist/divisors.hpp"

#include <algorithm>
#include <string>

#include "cpdist/errors.hpp"

namespace cpdist {

DivisorSieve::DivisorSieve(std::vector<std::uint32_t> spf)
    : limit_(static_cast<std::uint32_t>(spf.size() - 1)), spf_(std::move(spf)) {}

DivisorSieve DivisorSieve::build(std::uint32_t limit) {
  if (limit < 1) throw RangeError("sieve limit must be >= 1");
  if (limit > kMaxLimit) {
    throw ResourceError("sieve limit " + std::to_string(limit) + " exceeds the cap of " +
                        std::to_string(kMaxLimit));
  }
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(limit) + 1, 0);
  spf[1] = 1;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i] != 0) continue;
    spf[i] = static_cast<std::uint32_t>(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  return DivisorSieve(std::move(spf));
}

void DivisorSieve::check(std::uint32_t m) const {
  if (m < 1 || m > limit_) {
    throw RangeError("value " + std::to_string(m) + " outside sieve range [1, " +
                     std::to_string(limit_) + "]");
  }
}

std::uint32_t DivisorSieve::spf(std::uint32_t m) const {
  check(m);
  return spf_[m];
}

std::vector<std::pair<std::uint32_t, unsigned>> DivisorSieve::factorize(std::uint32_t m) const {
  check(m);
  std::vector<std::pair<std::uint32_t, unsigned>> out;
  while (m > 1) {
    const std::uint32_t z = spf_[m];
    unsigned a = 0;
    while (m % z == 0) {
      m /= z;
      ++a;
    }
    out.emplace_back(z, a);
  }
  return out;
}

std::uint32_t DivisorSieve::divisor_count(std::uint32_t m) const {
  check(m);
  std::uint32_t count = 1;
  while (m > 1) {
    const std::uint32_t z = spf_[m];
    std::uint32_t a = 0;
    while (m % z == 0) {
      m /= z;
      ++a;
    }
    count *= a + 1;
  }
  return count;
}

void DivisorSieve::divisors(std::uint32_t m, std::vector<std::uint32_t>& out) const {
  check(m);
  out.clear();
  out.push_back(1);
  while (m > 1) {
    const std::uint32_t z = spf_[m];
    const std::size_t base = out.size();
    std::uint32_t power = 1;
    while (m % z == 0) {
      m /= z;
      power *= z;
      for (std::size_t k = 0; k < base; ++k) out.push_back(out[k] * power);
    }
  }
  std::sort(out.begin(), out.end());
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> DivisorSieve::factor_pairs(
    std::uint32_t m) const {
  std::vector<std::uint32_t> divs;
  divisors(m, divs);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(divs.size());
  for (std::uint32_t i : divs) pairs.emplace_back(i, m / i);
  return pairs;
}

}  // namespace cpdist
