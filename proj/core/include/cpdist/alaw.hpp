#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cpdist {

enum class Family { Poisson, Binomial, NegBinomial, Geometric };

/// All four families, in the canonical (tie-breaking) order.
inline constexpr Family kAllFamilies[] = {Family::Binomial, Family::Geometric, Family::NegBinomial,
                                          Family::Poisson};

/// Lowercase wire name: "poisson", "binomial", "negbinomial", "geometric".
std::string_view family_name(Family family);

/// Inverse of family_name(). Throws ParameterError on unknown names.
Family parse_family(std::string_view name);

/// Number of free parameters used in the AIC penalty.
int free_parameters(Family family);

/**
 * Law of the multiplier A in X = AX + 1.
 *
 * Parameterization (success probability p, counting failures for the
 * negative binomial and geometric families):
 *   Poisson(lambda)        E[A] = lambda
 *   Binomial(n, p)         E[A] = n p
 *   NegBinomial(r, p)      E[A] = r (1 - p) / p
 *   Geometric(p)           E[A] = (1 - p) / p
 *
 * Construction rejects parameters for which P(A=0) or P(A=1) is not
 * strictly positive in double precision. Values are immutable.
 */
class ALaw {
 public:
  static ALaw poisson(double lambda);
  static ALaw binomial(std::int64_t n, double p);
  static ALaw negbinomial(std::int64_t r, double p);
  static ALaw geometric(double p);

  Family family() const noexcept { return family_; }

  /// Poisson rate, or the probability p of the other families.
  double real_param() const noexcept { return real_; }
  /// n (binomial) or r (negative binomial); 1 for the one-parameter families.
  std::int64_t int_param() const noexcept { return int_; }

  double pmf(std::uint64_t k) const;

  /// pmf(0), ..., pmf(count - 1). Entries past the numerical support are 0.
  std::vector<double> pmf_table(std::size_t count) const;

  /// E[A^m] from factorial moments and Stirling numbers of the second kind.
  double raw_moment(unsigned m) const;

  double mean() const noexcept;

  /// e.g. "binomial(n=2, p=0.37)".
  std::string describe() const;

  friend bool operator==(const ALaw&, const ALaw&) = default;

 private:
  ALaw(Family family, double real, std::int64_t integer);
  double log_pmf(std::uint64_t k) const;

  Family family_;
  double real_;
  std::int64_t int_;
};

/// Factorial moment E[A (A-1) ... (A-k+1)].
double factorial_moment(const ALaw& law, unsigned k);

/// Stirling number of the second kind S(m, k) as a double (exact for m <= 25).
double stirling2(unsigned m, unsigned k);

}  // namespace cpdist
