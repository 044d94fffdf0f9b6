#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "cpdist/alaw.hpp"

namespace cpdist {

enum class OverflowPolicy { Error, Saturate };

struct SampleConfig {
  std::uint64_t seed = 0;
  std::uint64_t max_steps = 1'000'000;
  OverflowPolicy overflow = OverflowPolicy::Error;
};

/// Value emitted in place of a variate that overflowed under OverflowPolicy::Saturate.
inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

/**
 * Exact sampler for X = 1 + A1 + A1 A2 + ...: start at s = 1, q = 1, draw
 * A until it is zero, accumulating q <- q a and s <- s + q.
 *
 * A is drawn by inversion on a lazily extended cumulative pmf table. Each
 * instance owns its generator (mt19937_64); the same seed and config give
 * the same stream on every platform.
 */
class Sampler {
 public:
  Sampler(const ALaw& law, SampleConfig config = {});

  std::uint64_t next();
  std::vector<std::uint64_t> sample(std::size_t count);

  /// One draw of A.
  std::uint64_t draw_a();
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  const ALaw& law() const noexcept { return law_; }

 private:
  void extend_cdf(double target);

  ALaw law_;
  SampleConfig config_;
  std::mt19937_64 rng_;
  std::vector<double> cdf_;
  bool cdf_exhausted_ = false;
};

std::vector<std::uint64_t> sample(const ALaw& law, const SampleConfig& config, std::size_t count);

}  // namespace cpdist
