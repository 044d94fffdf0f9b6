#include "cpdist/sampler.hpp"

#include <algorithm>
#include <string>

#include "cpdist/errors.hpp"

namespace cpdist {

Sampler::Sampler(const ALaw& law, SampleConfig config)
    : law_(law), config_(config), rng_(config.seed) {
  if (config_.max_steps < 1) throw ParameterError("max_steps must be >= 1");
  cdf_.push_back(law_.pmf(0));
}

double Sampler::uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

void Sampler::extend_cdf(double target) {
  const double mean = law_.mean();
  while (!cdf_exhausted_ && cdf_.back() <= target) {
    const std::uint64_t k = cdf_.size();
    const double mass = law_.pmf(k);
    if (mass == 0.0 && static_cast<double>(k) > mean) {
      cdf_exhausted_ = true;
      break;
    }
    cdf_.push_back(cdf_.back() + mass);
  }
}

std::uint64_t Sampler::draw_a() {
  const double u = uniform();
  if (cdf_.back() <= u) extend_cdf(u);
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) {
    // u fell in the rounding gap above the accumulated mass: take the last atom.
    return cdf_.size() - 1;
  }
  return static_cast<std::uint64_t>(it - cdf_.begin());
}

std::uint64_t Sampler::next() {
  std::uint64_t s = 1;
  std::uint64_t q = 1;
  for (std::uint64_t step = 0; step < config_.max_steps; ++step) {
    const std::uint64_t a = draw_a();
    if (a == 0) return s;
    if (__builtin_mul_overflow(q, a, &q) || __builtin_add_overflow(s, q, &s)) {
      if (config_.overflow == OverflowPolicy::Saturate) return kSaturated;
      throw SamplingError("variate of " + law_.describe() + " exceeds the 64-bit range");
    }
  }
  throw SamplingError("chain for " + law_.describe() + " did not terminate within " +
                      std::to_string(config_.max_steps) + " steps");
}

std::vector<std::uint64_t> Sampler::sample(std::size_t count) {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(next());
  return out;
}

std::vector<std::uint64_t> sample(const ALaw& law, const SampleConfig& config, std::size_t count) {
  return Sampler(law, config).sample(count);
}

}  // namespace cpdist
