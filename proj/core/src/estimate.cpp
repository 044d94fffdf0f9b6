#include "cpdist/estimate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

#include "cpdist/errors.hpp"

namespace cpdist {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kParamFloor = 1e-9;
constexpr double kPoissonCeiling = 50.0;
// Divisor lists are precomputed for datasets whose max value is at most this.
constexpr std::uint32_t kPrecomputeLimit = 2'000'000;

double logit(double p) { return std::log(p / (1.0 - p)); }
double expit(double u) { return 1.0 / (1.0 + std::exp(-u)); }

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CPDIST_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(std::min<long>(v, 256));
  }
  return 1;
}

std::optional<ALaw> try_law(Family family, std::int64_t k, double p) {
  try {
    switch (family) {
      case Family::Poisson:
        return ALaw::poisson(p);
      case Family::Binomial:
        return ALaw::binomial(k, p);
      case Family::NegBinomial:
        return ALaw::negbinomial(k, p);
      case Family::Geometric:
        return ALaw::geometric(p);
    }
  } catch (const ParameterError&) {
  }
  return std::nullopt;
}

// Search coordinate for the real parameter: log(lambda) or logit(p).
struct Coordinate {
  double lo;
  double hi;
  bool is_log;

  double to_param(double u) const { return is_log ? std::exp(u) : expit(u); }
};

Coordinate coordinate_for(Family family) {
  if (family == Family::Poisson) return {std::log(kParamFloor), std::log(kPoissonCeiling), true};
  return {logit(kParamFloor), logit(1.0 - kParamFloor), false};
}

struct InnerFit {
  double param = 0.0;
  double loglik = kNegInf;
  bool at_lower = false;
  bool at_upper = false;
};

InnerFit fit_real_param(LikelihoodEvaluator& eval, Family family, std::int64_t k,
                        const SearchOptions& search) {
  const Coordinate coord = coordinate_for(family);
  auto objective = [&](double u) {
    const auto law = try_law(family, k, coord.to_param(u));
    return law ? eval(*law) : kNegInf;
  };
  auto to_param = [&](double u) { return coord.to_param(u); };
  const Maximum1D best =
      grid_golden_maximize(objective, coord.lo, coord.hi, search.grid_points, search.tol, to_param);
  return {coord.to_param(best.argmax), best.value, best.at_lower, best.at_upper};
}

}  // namespace

FrequencyDataset FrequencyDataset::from_observations(std::span<const std::uint64_t> values) {
  FrequencyDataset data;
  for (std::uint64_t v : values) data.add(v);
  return data;
}

void FrequencyDataset::add(std::uint64_t value, std::uint64_t count) {
  if (value == 0) throw DomainError("observed value 0 is outside the support {1, 2, ...}");
  if (count == 0) throw DomainError("observation count must be positive");
  entries_[value] += count;
  total_ += count;
}

FrequencyDataset FrequencyDataset::scaled(std::uint64_t factor) const {
  if (factor == 0) throw DomainError("scale factor must be positive");
  FrequencyDataset out;
  for (const auto& [value, count] : entries_) out.add(value, count * factor);
  return out;
}

SampleMoments sample_moments(const FrequencyDataset& data) {
  if (data.empty()) throw DomainError("sample moments of an empty dataset");
  long double s1 = 0.0L;
  long double s2 = 0.0L;
  for (const auto& [value, count] : data.entries()) {
    const long double v = static_cast<long double>(value);
    s1 += v * count;
    s2 += v * v * count;
  }
  const long double n = static_cast<long double>(data.total());
  return {static_cast<double>(s1 / n), static_cast<double>(s2 / n)};
}

std::string_view method_name(Method method) { return method == Method::MoM ? "mom" : "mle"; }

std::optional<ALaw> FitResult::law() const { return try_law(family, int_param, real_param); }

FitResult mom_fit(const FrequencyDataset& data, Family family) {
  const auto [mu, mu2] = sample_moments(data);
  FitResult fit;
  fit.family = family;
  fit.method = Method::MoM;

  if (!(mu > 1.0)) {
    // No spread above the minimum value 1: the boundary law X = 1 a.s.
    fit.diagnostics.boundary = true;
    fit.diagnostics.degenerate = true;
    fit.diagnostics.note = "sample mean <= 1; estimate is the degenerate boundary X = 1";
    fit.real_param = (family == Family::Poisson || family == Family::Binomial) ? 0.0 : 1.0;
    return fit;
  }

  switch (family) {
    case Family::Poisson:
      fit.real_param = 1.0 - 1.0 / mu;
      break;
    case Family::Geometric:
      fit.real_param = mu / (2.0 * mu - 1.0);
      break;
    case Family::Binomial:
    case Family::NegBinomial: {
      const double denom = (2.0 * mu - 1.0) * mu * mu + (mu * mu - 3.0 * mu + 1.0) * mu2;
      const double sign = family == Family::Binomial ? 1.0 : -1.0;
      const double effective = sign * denom;
      if (!std::isfinite(effective) || effective <= 0.0) {
        throw MomentConditionError(std::string(family_name(family)) +
                                   ": moment equations have no admissible solution (denominator " +
                                   std::to_string(effective) + ")");
      }
      const double raw = (mu - 1.0) * (mu - 1.0) * mu2 / effective;
      fit.diagnostics.raw_integer_estimate = raw;
      const double rounded = std::round(raw);
      if (!std::isfinite(rounded) || rounded > 1e9) {
        throw MomentConditionError(std::string(family_name(family)) + ": integer estimate overflows");
      }
      fit.int_param = std::max<std::int64_t>(1, static_cast<std::int64_t>(rounded));
      if (rounded < 1.0) fit.diagnostics.boundary = true;
      const double k = static_cast<double>(fit.int_param);
      // Re-solve p from the mean equation at the rounded integer.
      fit.real_param = family == Family::Binomial ? (mu - 1.0) / (k * mu) : mu * k / (mu * (k + 1.0) - 1.0);
      break;
    }
  }
  return fit;
}

LikelihoodEvaluator::LikelihoodEvaluator(const FrequencyDataset& data)
    : LikelihoodEvaluator(data, make_engine(data)) {}

LikelihoodEvaluator::LikelihoodEvaluator(const FrequencyDataset& data,
                                         std::shared_ptr<const DensityEngine> engine)
    : data_(&data), limit_(static_cast<std::uint32_t>(data.max_value())), engine_(std::move(engine)) {
  if (data.empty()) throw DomainError("likelihood of an empty dataset");
  if (engine_->max_limit() < limit_) throw RangeError("density engine too small for dataset");
}

std::shared_ptr<const DensityEngine> LikelihoodEvaluator::make_engine(const FrequencyDataset& data) {
  if (data.empty()) throw DomainError("likelihood of an empty dataset");
  const std::uint64_t top = data.max_value();
  if (top > kMaxFitLimit) {
    throw ResourceError("max observed value " + std::to_string(top) + " exceeds the fit cap of " +
                        std::to_string(kMaxFitLimit));
  }
  const auto limit = static_cast<std::uint32_t>(top);
  return std::make_shared<const DensityEngine>(limit, limit <= kPrecomputeLimit);
}

double LikelihoodEvaluator::operator()(const ALaw& law) {
  const auto key = std::make_tuple(static_cast<int>(law.family()), law.int_param(),
                                   static_cast<std::int64_t>(std::llround(law.real_param() * 1e9)));
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  ++evaluations_;
  const std::vector<double> pmf = law.pmf_table(limit_);
  const std::vector<double> probs = engine_->compute_from_pmf(pmf, limit_);
  double total = 0.0;
  for (const auto& [value, count] : data_->entries()) {
    total += static_cast<double>(count) * std::log(probs[value]);
  }
  cache_.emplace(key, total);
  return total;
}

double loglik(const FrequencyDataset& data, const ALaw& law) {
  LikelihoodEvaluator eval(data);
  return eval(law);
}

double degenerate_loglik(const FrequencyDataset& data) {
  return data.max_value() <= 1 ? 0.0 : kNegInf;
}

double aic(double loglik, int k) { return 2.0 * k - 2.0 * loglik; }

FitResult mle_fit(const FrequencyDataset& data, Family family, const SearchOptions& search) {
  if (search.int_max < 1) throw ParameterError("int_max must be >= 1");
  if (!(search.tol > 0.0)) throw ParameterError("tol must be > 0");

  FitResult fit;
  fit.family = family;
  fit.method = Method::MLE;
  auto engine = LikelihoodEvaluator::make_engine(data);

  if (free_parameters(family) == 1) {
    LikelihoodEvaluator eval(data, engine);
    const InnerFit best = fit_real_param(eval, family, 1, search);
    fit.real_param = best.param;
    fit.loglik = best.loglik;
    fit.diagnostics.boundary = best.at_lower || best.at_upper;
  } else {
    const auto count = static_cast<std::size_t>(search.int_max);
    std::vector<InnerFit> per_integer(count);
    const unsigned workers = std::min<unsigned>(resolve_threads(search.threads), static_cast<unsigned>(count));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      LikelihoodEvaluator eval(data, engine);
      for (std::size_t idx = next++; idx < count; idx = next++) {
        per_integer[idx] = fit_real_param(eval, family, static_cast<std::int64_t>(idx + 1), search);
      }
    };
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    }
    std::size_t best = 0;
    for (std::size_t idx = 1; idx < count; ++idx) {
      if (per_integer[idx].loglik > per_integer[best].loglik) best = idx;
    }
    fit.int_param = static_cast<std::int64_t>(best + 1);
    fit.real_param = per_integer[best].param;
    fit.loglik = per_integer[best].loglik;
    fit.diagnostics.boundary = per_integer[best].at_lower || per_integer[best].at_upper;
    fit.diagnostics.int_max_exhausted = count > 1 && best + 1 == count;
    if (fit.diagnostics.int_max_exhausted) {
      fit.diagnostics.note = "best integer parameter is the scan limit; likelihood may still improve";
    }
  }
  fit.aic = aic(*fit.loglik, free_parameters(family));
  return fit;
}

void evaluate_fit(const FrequencyDataset& data, FitResult& fit) {
  const auto law = fit.law();
  const double ll = law ? loglik(data, *law) : degenerate_loglik(data);
  fit.loglik = ll;
  fit.aic = aic(ll, free_parameters(fit.family));
}

std::vector<FitResult> compare_models(const FrequencyDataset& data, CompareMode mode,
                                      const SearchOptions& search) {
  std::vector<FitResult> fits;
  for (Family family : kAllFamilies) {
    const bool by_moments =
        mode == CompareMode::Mixed && (family == Family::Poisson || family == Family::Geometric);
    if (by_moments) {
      FitResult fit = mom_fit(data, family);
      evaluate_fit(data, fit);
      fits.push_back(std::move(fit));
    } else {
      fits.push_back(mle_fit(data, family, search));
    }
  }
  std::stable_sort(fits.begin(), fits.end(),
                   [](const FitResult& a, const FitResult& b) { return *a.aic < *b.aic; });
  return fits;
}

}  // namespace cpdist
