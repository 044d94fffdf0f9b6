#pragma once

#include <utility>
#include <vector>

#include "cpdist/alaw.hpp"

namespace cpdist {

/// A moment that is either a finite real or +infinity (divergent).
struct MomentValue {
  bool finite = false;
  double value = 0.0;

  static MomentValue of(double v) { return {true, v}; }
  static MomentValue infinite() { return {false, 0.0}; }
};

struct MomentReport {
  ALaw law;
  std::vector<MomentValue> raw;      // E[X^m], m = 0..4
  std::vector<MomentValue> central;  // E[(X - mean)^m], m = 0..4
  MomentValue mean;
  MomentValue variance;
  MomentValue skewness;  // mu3 / mu2^(3/2)
  MomentValue kurtosis;  // mu4 / mu2^2
};

/// E[X^m] for m = 0..max_order from the binomial-expansion recursion
///   E[X^m] = sum_{i<m} C(m,i) E[A^i] E[X^i] / (1 - E[A^m]).
/// An entry is infinite when E[A^m] >= 1 or any lower entry is infinite.
std::vector<MomentValue> raw_moments_X(const ALaw& law, unsigned max_order);

/// Closed-form mean and variance; infinite when the matching finiteness() predicate fails.
std::pair<MomentValue, MomentValue> closed_form_mean_var(const ALaw& law);

/// Per-family closed-form condition for E[X^order] < infinity, order in {1, 2}.
bool finiteness(const ALaw& law, unsigned order);

/// Same question answered by the cumulative test E[A^i] < 1 for i = 1..order.
bool finiteness_by_recursion(const ALaw& law, unsigned order);

std::pair<MomentValue, MomentValue> skewness_kurtosis(const ALaw& law);

MomentReport moment_report(const ALaw& law);

/**
 * Reference closed-form "skewness" and "kurtosis" expressions, evaluated as
 * printed with no finiteness handling. Numerically these equal
 * mu3 / mu2^3 and mu4 / mu2^4 (not the standardized moments) for the
 * Poisson and geometric families; see tests/unit/test_moments.cpp for the
 * per-family characterization.
 */
double appendix_skew_formula(const ALaw& law);
double appendix_kurt_formula(const ALaw& law);

}  // namespace cpdist
