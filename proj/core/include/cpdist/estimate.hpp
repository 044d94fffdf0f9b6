#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "cpdist/alaw.hpp"
#include "cpdist/density.hpp"

namespace cpdist {

/// Largest observed value a likelihood evaluation will accept.
inline constexpr std::uint64_t kMaxFitLimit = 10'000'000;

/// Observations that are positive integers, stored as value -> count.
class FrequencyDataset {
 public:
  FrequencyDataset() = default;

  static FrequencyDataset from_observations(std::span<const std::uint64_t> values);

  /// Adds `count` observations of `value`. Throws DomainError for value 0
  /// (X >= 1) or count 0.
  void add(std::uint64_t value, std::uint64_t count = 1);

  const std::map<std::uint64_t, std::uint64_t>& entries() const noexcept { return entries_; }
  std::uint64_t total() const noexcept { return total_; }
  bool empty() const noexcept { return total_ == 0; }
  std::uint64_t max_value() const noexcept { return entries_.empty() ? 0 : entries_.rbegin()->first; }

  /// Every count multiplied by `factor` (>= 1).
  FrequencyDataset scaled(std::uint64_t factor) const;

  friend bool operator==(const FrequencyDataset&, const FrequencyDataset&) = default;

 private:
  std::map<std::uint64_t, std::uint64_t> entries_;
  std::uint64_t total_ = 0;
};

struct SampleMoments {
  double first = 0.0;   // (1/total) sum value * count
  double second = 0.0;  // (1/total) sum value^2 * count
};

SampleMoments sample_moments(const FrequencyDataset& data);

enum class Method { MoM, MLE };

std::string_view method_name(Method method);

struct FitDiagnostics {
  bool boundary = false;           // estimate sits on (or was clamped to) the parameter boundary
  bool degenerate = false;         // data carry no spread (sample mean <= 1)
  bool int_max_exhausted = false;  // best integer parameter is the scan's upper end
  std::optional<double> raw_integer_estimate;  // unrounded n or r from the moment equations
  std::string note;
};

struct FitResult {
  Family family = Family::Poisson;
  Method method = Method::MoM;
  double real_param = 0.0;       // lambda or p
  std::int64_t int_param = 1;    // n or r; 1 for the one-parameter families
  std::optional<double> loglik;
  std::optional<double> aic;
  FitDiagnostics diagnostics;

  /// The fitted law, or nullopt when the estimate is a degenerate boundary
  /// point (e.g. lambda = 0) that is not an admissible ALaw.
  std::optional<ALaw> law() const;
};

/// Method-of-moments estimate. Throws MomentConditionError when the
/// two-parameter moment equations have no admissible solution.
FitResult mom_fit(const FrequencyDataset& data, Family family);

/// sum count * log P(X = value). Throws ResourceError if max value > kMaxFitLimit.
double loglik(const FrequencyDataset& data, const ALaw& law);

/// Log-likelihood of the degenerate law X = 1 a.s.: 0 if every value is 1, else -inf.
double degenerate_loglik(const FrequencyDataset& data);

double aic(double loglik, int k);

struct SearchOptions {
  std::int64_t int_max = 50;
  double tol = 1e-6;
  int grid_points = 64;
  /// Worker threads for the integer scan; 0 reads CPDIST_THREADS (default 1).
  unsigned threads = 0;
};

/**
 * Reusable log-likelihood evaluator for one dataset. Keeps the divisor
 * tables for max_value() and caches log-likelihoods keyed by family and
 * parameters quantized at 1e-9. Not thread-safe; use one per thread.
 */
class LikelihoodEvaluator {
 public:
  explicit LikelihoodEvaluator(const FrequencyDataset& data);
  /// Shares an engine built for at least data.max_value().
  LikelihoodEvaluator(const FrequencyDataset& data, std::shared_ptr<const DensityEngine> engine);

  /// Engine sized for `data`, suitable for sharing across evaluators.
  static std::shared_ptr<const DensityEngine> make_engine(const FrequencyDataset& data);

  double operator()(const ALaw& law);

  std::size_t evaluations() const noexcept { return evaluations_; }

 private:
  const FrequencyDataset* data_;
  std::uint32_t limit_;
  std::shared_ptr<const DensityEngine> engine_;
  std::map<std::tuple<int, std::int64_t, std::int64_t>, double> cache_;
  std::size_t evaluations_ = 0;
};

/// Maximum-likelihood fit. One-parameter families: 64-point grid in a
/// log/logit coordinate, then golden-section refinement around the best
/// grid point. Two-parameter families: integer scan 1..int_max with the
/// same 1D search for p at each integer; ties go to the smaller integer.
FitResult mle_fit(const FrequencyDataset& data, Family family, const SearchOptions& search = {});

/// Fills loglik and aic of a fit in place.
void evaluate_fit(const FrequencyDataset& data, FitResult& fit);

enum class CompareMode {
  Mixed,  // Poisson and geometric by moments, binomial and negative binomial by MLE
  AllMle,
};

/// Fits all four families and sorts ascending by AIC (ties: family-name order).
std::vector<FitResult> compare_models(const FrequencyDataset& data, CompareMode mode = CompareMode::Mixed,
                                      const SearchOptions& search = {});

/// 1D maximizer shared by the MLE routines; exposed for testing.
struct Maximum1D {
  double argmax = 0.0;
  double value = 0.0;
  bool at_lower = false;
  bool at_upper = false;
};

/// Maximizes f over the coordinate interval [lo, hi]: grid of `grid_points`,
/// then golden-section search on the bracket around the best grid point
/// until the bracket, mapped through `to_param`, is narrower than `tol`.
template <class F, class Map>
Maximum1D grid_golden_maximize(F&& f, double lo, double hi, int grid_points, double tol, Map&& to_param);

}  // namespace cpdist

#include "cpdist/detail/maximize.hpp"
