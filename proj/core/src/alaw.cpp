#include "cpdist/alaw.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "cpdist/errors.hpp"

namespace cpdist {

namespace {

bool open_unit(double p) { return std::isfinite(p) && p > 0.0 && p < 1.0; }

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::Poisson:
      return "poisson";
    case Family::Binomial:
      return "binomial";
    case Family::NegBinomial:
      return "negbinomial";
    case Family::Geometric:
      return "geometric";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  throw ParameterError("unknown family '" + std::string(name) +
                       "' (expected poisson, binomial, negbinomial or geometric)");
}

int free_parameters(Family family) {
  return (family == Family::Binomial || family == Family::NegBinomial) ? 2 : 1;
}

ALaw::ALaw(Family family, double real, std::int64_t integer)
    : family_(family), real_(real), int_(integer) {
  if (!(pmf(0) > 0.0) || !(pmf(1) > 0.0)) {
    throw ParameterError(describe() + ": P(A=0) and P(A=1) must be positive in double precision");
  }
}

ALaw ALaw::poisson(double lambda) {
  if (!std::isfinite(lambda) || lambda <= 0.0) {
    throw ParameterError("poisson: lambda must be finite and > 0, got " + fmt_double(lambda));
  }
  return ALaw(Family::Poisson, lambda, 1);
}

ALaw ALaw::binomial(std::int64_t n, double p) {
  if (n < 1) throw ParameterError("binomial: n must be >= 1, got " + std::to_string(n));
  if (!open_unit(p)) throw ParameterError("binomial: p must lie in (0,1), got " + fmt_double(p));
  return ALaw(Family::Binomial, p, n);
}

ALaw ALaw::negbinomial(std::int64_t r, double p) {
  if (r < 1) throw ParameterError("negbinomial: r must be >= 1, got " + std::to_string(r));
  if (!open_unit(p)) throw ParameterError("negbinomial: p must lie in (0,1), got " + fmt_double(p));
  return ALaw(Family::NegBinomial, p, r);
}

ALaw ALaw::geometric(double p) {
  if (!open_unit(p)) throw ParameterError("geometric: p must lie in (0,1), got " + fmt_double(p));
  return ALaw(Family::Geometric, p, 1);
}

double ALaw::log_pmf(std::uint64_t k) const {
  const double kd = static_cast<double>(k);
  switch (family_) {
    case Family::Poisson:
      return -real_ + kd * std::log(real_) - std::lgamma(kd + 1.0);
    case Family::Binomial: {
      const double n = static_cast<double>(int_);
      if (kd > n) return -std::numeric_limits<double>::infinity();
      return std::lgamma(n + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(n - kd + 1.0) +
             kd * std::log(real_) + (n - kd) * std::log1p(-real_);
    }
    case Family::NegBinomial: {
      const double r = static_cast<double>(int_);
      return std::lgamma(kd + r) - std::lgamma(kd + 1.0) - std::lgamma(r) + r * std::log(real_) +
             kd * std::log1p(-real_);
    }
    case Family::Geometric:
      return std::log(real_) + kd * std::log1p(-real_);
  }
  return -std::numeric_limits<double>::infinity();
}

double ALaw::pmf(std::uint64_t k) const {
  // Small k go through exact products so that pmf(0), pmf(1) carry no lgamma noise.
  switch (family_) {
    case Family::Poisson:
      if (k == 0) return std::exp(-real_);
      break;
    case Family::Binomial:
      if (k > static_cast<std::uint64_t>(int_)) return 0.0;
      if (k == 0) return std::exp(static_cast<double>(int_) * std::log1p(-real_));
      break;
    case Family::NegBinomial:
      if (k == 0) return std::pow(real_, static_cast<double>(int_));
      break;
    case Family::Geometric:
      return real_ * std::pow(1.0 - real_, static_cast<double>(k));
  }
  return std::exp(log_pmf(k));
}

std::vector<double> ALaw::pmf_table(std::size_t count) const {
  std::vector<double> table(count, 0.0);
  const double m = mean();
  for (std::size_t k = 0; k < count; ++k) {
    const double v = pmf(k);
    table[k] = v;
    // Past the mode the pmf is non-increasing for all four families.
    if (v == 0.0 && static_cast<double>(k) > m) break;
  }
  return table;
}

double stirling2(unsigned m, unsigned k) {
  if (k > m) return 0.0;
  if (m == 0) return k == 0 ? 1.0 : 0.0;
  std::vector<double> row(m + 1, 0.0);
  row[0] = 1.0;
  for (unsigned n = 1; n <= m; ++n) {
    for (unsigned j = n; j >= 1; --j) row[j] = static_cast<double>(j) * row[j] + row[j - 1];
    row[0] = 0.0;
  }
  return row[k];
}

double factorial_moment(const ALaw& law, unsigned k) {
  const double p = law.real_param();
  const double count = static_cast<double>(law.int_param());
  double out = 1.0;
  switch (law.family()) {
    case Family::Poisson:
      for (unsigned i = 0; i < k; ++i) out *= p;
      return out;
    case Family::Binomial:
      for (unsigned i = 0; i < k; ++i) out *= (count - i) * p;
      return out;
    case Family::NegBinomial: {
      const double odds = (1.0 - p) / p;
      for (unsigned i = 0; i < k; ++i) out *= (count + i) * odds;
      return out;
    }
    case Family::Geometric: {
      const double odds = (1.0 - p) / p;
      for (unsigned i = 1; i <= k; ++i) out *= i * odds;
      return out;
    }
  }
  return out;
}

double ALaw::raw_moment(unsigned m) const {
  if (m == 0) return 1.0;
  double total = 0.0;
  for (unsigned k = 1; k <= m; ++k) total += stirling2(m, k) * factorial_moment(*this, k);
  return total;
}

double ALaw::mean() const noexcept {
  switch (family_) {
    case Family::Poisson:
      return real_;
    case Family::Binomial:
      return static_cast<double>(int_) * real_;
    case Family::NegBinomial:
      return static_cast<double>(int_) * (1.0 - real_) / real_;
    case Family::Geometric:
      return (1.0 - real_) / real_;
  }
  return 0.0;
}

std::string ALaw::describe() const {
  std::ostringstream os;
  os.precision(6);
  os << family_name(family_) << '(';
  switch (family_) {
    case Family::Poisson:
      os << "lambda=" << real_;
      break;
    case Family::Binomial:
      os << "n=" << int_ << ", p=" << real_;
      break;
    case Family::NegBinomial:
      os << "r=" << int_ << ", p=" << real_;
      break;
    case Family::Geometric:
      os << "p=" << real_;
      break;
  }
  os << ')';
  return os.str();
}

}  // namespace cpdist
