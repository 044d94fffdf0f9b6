#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cpdist/alaw.hpp"

namespace cpdist {

enum class BenchMethod { Recursion, Bruteforce };

std::string_view bench_method_name(BenchMethod method);

struct BenchRow {
  std::uint32_t limit = 0;
  double seconds = 0.0;    // median wall time of one density computation
  std::uint64_t work = 0;  // pair visits (recursion) or chain states (brute force)
};

struct BenchReport {
  BenchMethod method = BenchMethod::Recursion;
  std::vector<BenchRow> rows;
};

struct BenchOptions {
  int runs = 3;
  /// Each run repeats the computation until this much time has passed and
  /// reports the mean, so microsecond-scale cases are still resolvable.
  double min_run_seconds = 0.0;
};

/// Times the divisor recursion at each limit (strictly increasing).
BenchReport bench_density(const ALaw& law, std::span<const std::uint32_t> limits, BenchOptions options = {});

/// Times the chain-enumeration oracle at each limit (each <= 14).
BenchReport bench_bruteforce(const ALaw& law, std::span<const std::uint32_t> limits,
                             BenchOptions options = {});

}  // namespace cpdist
