#include "cpdist/bench.hpp"

#include <algorithm>
#include <chrono>

#include "cpdist/density.hpp"
#include "cpdist/errors.hpp"

namespace cpdist {

namespace {

void check_limits(std::span<const std::uint32_t> limits) {
  for (std::size_t i = 1; i < limits.size(); ++i) {
    if (limits[i] <= limits[i - 1]) throw RangeError("benchmark limits must be strictly increasing");
  }
}

template <class Fn>
BenchRow time_one(std::uint32_t limit, const BenchOptions& options, Fn&& fn) {
  using clock = std::chrono::steady_clock;
  std::vector<double> samples;
  std::uint64_t work = 0;
  const int runs = std::max(options.runs, 1);
  for (int r = 0; r < runs; ++r) {
    std::uint64_t reps = 0;
    const auto start = clock::now();
    double elapsed = 0.0;
    do {
      work = fn();
      ++reps;
      elapsed = std::chrono::duration<double>(clock::now() - start).count();
    } while (elapsed < options.min_run_seconds);
    samples.push_back(elapsed / static_cast<double>(reps));
  }
  std::sort(samples.begin(), samples.end());
  return {limit, samples[samples.size() / 2], work};
}

}  // namespace

std::string_view bench_method_name(BenchMethod method) {
  return method == BenchMethod::Recursion ? "recursion" : "bruteforce";
}

BenchReport bench_density(const ALaw& law, std::span<const std::uint32_t> limits, BenchOptions options) {
  check_limits(limits);
  BenchReport report{BenchMethod::Recursion, {}};
  for (std::uint32_t limit : limits) {
    report.rows.push_back(time_one(limit, options, [&] { return cp_density(law, limit).work(); }));
  }
  return report;
}

BenchReport bench_bruteforce(const ALaw& law, std::span<const std::uint32_t> limits, BenchOptions options) {
  check_limits(limits);
  BenchReport report{BenchMethod::Bruteforce, {}};
  for (std::uint32_t limit : limits) {
    report.rows.push_back(time_one(limit, options, [&] { return cp_density_bruteforce(law, limit).work(); }));
  }
  return report;
}

}  // namespace cpdist
