#include "cpdist/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cpdist/errors.hpp"

namespace cpdist {

namespace {

void check_limit(std::uint32_t limit) {
  if (limit < 1) throw RangeError("density limit must be >= 1");
  if (limit > kMaxDensityLimit) {
    throw ResourceError("density limit " + std::to_string(limit) + " exceeds the cap of " +
                        std::to_string(kMaxDensityLimit));
  }
}

// Neumaier summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

CpDensity::CpDensity(ALaw law, std::vector<double> probs, std::uint64_t work)
    : law_(law), probs_(std::move(probs)), work_(work) {
  CompensatedSum total;
  for (std::size_t n = 1; n < probs_.size(); ++n) total.add(probs_[n]);
  tail_mass_ = std::max(0.0, 1.0 - total.value());
}

double CpDensity::prob(std::uint32_t n) const {
  if (n < 1 || n >= probs_.size()) {
    throw RangeError("P(X=" + std::to_string(n) + ") requested outside [1, " +
                     std::to_string(limit()) + "]");
  }
  return probs_[n];
}

DensityEngine::DensityEngine(std::uint32_t max_limit, bool precompute_divisors)
    : sieve_((check_limit(max_limit), DivisorSieve::build(std::max<std::uint32_t>(1, max_limit - 1)))) {
  if (!precompute_divisors) return;
  const std::uint32_t top = sieve_.limit();
  offsets_.assign(static_cast<std::size_t>(top) + 2, 0);
  // Counting pass, then fill in ascending divisor order.
  for (std::uint32_t i = 1; i <= top; ++i) {
    for (std::uint64_t m = i; m <= top; m += i) ++offsets_[m + 1];
  }
  for (std::size_t m = 1; m < offsets_.size(); ++m) offsets_[m] += offsets_[m - 1];
  divisors_.resize(offsets_.back());
  std::vector<std::uint64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::uint32_t i = 1; i <= top; ++i) {
    for (std::uint64_t m = i; m <= top; m += i) divisors_[cursor[m]++] = i;
  }
}

std::vector<double> DensityEngine::compute_from_pmf(std::span<const double> pmf, std::uint32_t limit,
                                                    DensityOptions options,
                                                    std::uint64_t* pair_visits) const {
  check_limit(limit);
  if (limit > max_limit()) {
    throw RangeError("density limit " + std::to_string(limit) + " exceeds engine capacity " +
                     std::to_string(max_limit()));
  }
  if (pmf.empty()) throw ParameterError("empty pmf for A");

  // Trailing zeros of the pmf contribute nothing; stop each divisor scan there.
  std::size_t support = pmf.size();
  while (support > 1 && pmf[support - 1] == 0.0) --support;

  std::vector<double> probs(static_cast<std::size_t>(limit) + 1, 0.0);
  probs[1] = pmf[0];
  std::vector<std::uint32_t> scratch;
  scratch.reserve(1024);
  std::uint64_t visits = 0;

  for (std::uint32_t n = 2; n <= limit; ++n) {
    const std::uint32_t m = n - 1;
    std::span<const std::uint32_t> divs;
    if (!offsets_.empty()) {
      divs = {divisors_.data() + offsets_[m], static_cast<std::size_t>(offsets_[m + 1] - offsets_[m])};
    } else {
      sieve_.divisors(m, scratch);
      divs = scratch;
    }
    visits += divs.size();
    if (options.compensated) {
      CompensatedSum acc;
      for (std::uint32_t i : divs) {
        if (i >= support) break;
        acc.add(pmf[i] * probs[m / i]);
      }
      probs[n] = acc.value();
    } else {
      double acc = 0.0;
      for (std::uint32_t i : divs) {
        if (i >= support) break;
        acc += pmf[i] * probs[m / i];
      }
      probs[n] = acc;
    }
  }
  if (pair_visits != nullptr) *pair_visits = visits;
  return probs;
}

CpDensity DensityEngine::compute(const ALaw& law, std::uint32_t limit, DensityOptions options) const {
  check_limit(limit);
  const std::vector<double> pmf = law.pmf_table(limit);
  std::uint64_t visits = 0;
  auto probs = compute_from_pmf(pmf, limit, options, &visits);
  return CpDensity(law, std::move(probs), visits);
}

CpDensity cp_density(const ALaw& law, std::uint32_t limit, DensityOptions options) {
  check_limit(limit);
  return DensityEngine(limit).compute(law, limit, options);
}

CpDensity cp_density_bruteforce(const ALaw& law, std::uint32_t limit) {
  if (limit < 1) throw RangeError("density limit must be >= 1");
  if (limit > kMaxBruteforceLimit) {
    throw ResourceError("brute-force enumeration refuses limit " + std::to_string(limit) +
                        " (cap " + std::to_string(kMaxBruteforceLimit) + ")");
  }
  const std::vector<double> pmf = law.pmf_table(limit);
  std::vector<double> probs(static_cast<std::size_t>(limit) + 1, 0.0);
  std::uint64_t states = 0;

  struct State {
    std::uint64_t sum;
    std::uint64_t product;
    double weight;
  };
  // Depth-first over chains: s <- s + q a, q <- q a; a = 0 stops and emits s.
  std::vector<State> stack{{1, 1, 1.0}};
  while (!stack.empty()) {
    const State st = stack.back();
    stack.pop_back();
    ++states;
    probs[st.sum] += st.weight * pmf[0];
    for (std::uint64_t a = 1; st.sum + st.product * a <= limit; ++a) {
      stack.push_back({st.sum + st.product * a, st.product * a, st.weight * pmf[a]});
    }
  }
  return CpDensity(law, std::move(probs), states);
}

double tail_mass_at(const CpDensity& density) { return density.tail_mass(); }

double partial_moment(const CpDensity& density, unsigned m) {
  CompensatedSum acc;
  const auto probs = density.probs();
  for (std::size_t k = 0; k < probs.size(); ++k) {
    acc.add(std::pow(static_cast<double>(k + 1), static_cast<double>(m)) * probs[k]);
  }
  return acc.value();
}

std::uint64_t expected_pair_visits(const DivisorSieve& sieve, std::uint32_t limit) {
  std::uint64_t total = 0;
  for (std::uint32_t m = 1; m + 1 <= limit; ++m) total += sieve.divisor_count(m);
  return total;
}

}  // namespace cpdist
