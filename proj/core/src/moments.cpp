#include "cpdist/moments.hpp"

#include <cmath>

namespace cpdist {

namespace {

double binom(unsigned m, unsigned i) {
  double c = 1.0;
  for (unsigned k = 1; k <= i; ++k) c = c * (m - i + k) / k;
  return c;
}

double ipow(double x, int e) {
  double out = 1.0;
  for (int k = 0; k < e; ++k) out *= x;
  return out;
}

}  // namespace

std::vector<MomentValue> raw_moments_X(const ALaw& law, unsigned max_order) {
  std::vector<MomentValue> raw(max_order + 1);
  raw[0] = MomentValue::of(1.0);
  std::vector<double> a_moments(max_order + 1);
  for (unsigned m = 0; m <= max_order; ++m) a_moments[m] = law.raw_moment(m);

  for (unsigned m = 1; m <= max_order; ++m) {
    if (!raw[m - 1].finite || a_moments[m] >= 1.0) {
      raw[m] = MomentValue::infinite();
      continue;
    }
    double numer = 0.0;
    for (unsigned i = 0; i < m; ++i) numer += binom(m, i) * a_moments[i] * raw[i].value;
    raw[m] = MomentValue::of(numer / (1.0 - a_moments[m]));
  }
  return raw;
}

bool finiteness(const ALaw& law, unsigned order) {
  const double p = law.real_param();
  const double k = static_cast<double>(law.int_param());
  switch (law.family()) {
    case Family::Poisson:
      return order == 1 ? p < 1.0 : p < (std::sqrt(5.0) - 1.0) / 2.0;
    case Family::Binomial:
      if (law.int_param() == 1) return true;
      if (order == 1) return p < 1.0 / k;
      return p < 0.5 * std::sqrt((5.0 * k - 4.0) / ((k - 1.0) * (k - 1.0) * k)) - 1.0 / (2.0 * (k - 1.0));
    case Family::NegBinomial:
      if (order == 1) return k / (1.0 + k) < p;
      if (law.int_param() == 1) return 2.0 / 3.0 < p;
      return (2.0 * k * k + k) / (2.0 * (k * k - 1.0)) -
                 0.5 * std::sqrt((5.0 * k * k + 4.0 * k) / ((k * k - 1.0) * (k * k - 1.0))) <
             p;
    case Family::Geometric:
      return order == 1 ? 0.5 < p : 2.0 / 3.0 < p;
  }
  return false;
}

bool finiteness_by_recursion(const ALaw& law, unsigned order) {
  for (unsigned i = 1; i <= order; ++i) {
    if (law.raw_moment(i) >= 1.0) return false;
  }
  return true;
}

std::pair<MomentValue, MomentValue> closed_form_mean_var(const ALaw& law) {
  const double p = law.real_param();
  const double k = static_cast<double>(law.int_param());
  double mean = 0.0;
  double var = 0.0;
  switch (law.family()) {
    case Family::Poisson: {
      const double l = p;
      mean = 1.0 / (1.0 - l);
      var = -l / ((l - 1.0) * (l - 1.0) * (l * l + l - 1.0));
      break;
    }
    case Family::Binomial: {
      const double n = k;
      mean = 1.0 / (1.0 - n * p);
      var = n * (p - 1.0) * p /
            ((n * p - 1.0) * (n * p - 1.0) * (n * n * p * p - n * (p - 1.0) * p - 1.0));
      break;
    }
    case Family::NegBinomial: {
      const double r = k;
      const double d = p * r + p - r;
      mean = p / d;
      var = (p - 1.0) * p * p * r /
            (d * d * (p * p * (r * r - 1.0) - p * r * (2.0 * r + 1.0) + r * (r + 1.0)));
      break;
    }
    case Family::Geometric:
      mean = p / (2.0 * p - 1.0);
      var = -(p - 1.0) * p * p / ((1.0 - 2.0 * p) * (1.0 - 2.0 * p) * (3.0 * p - 2.0));
      break;
  }
  const bool mean_finite = finiteness(law, 1);
  const bool var_finite = mean_finite && finiteness(law, 2);
  return {mean_finite ? MomentValue::of(mean) : MomentValue::infinite(),
          var_finite ? MomentValue::of(var) : MomentValue::infinite()};
}

namespace {

std::vector<MomentValue> central_from_raw(const std::vector<MomentValue>& raw) {
  std::vector<MomentValue> central(raw.size(), MomentValue::infinite());
  central[0] = MomentValue::of(1.0);
  if (raw.size() < 2 || !raw[1].finite) return central;
  const double mu = raw[1].value;
  central[1] = MomentValue::of(0.0);
  for (unsigned m = 2; m < raw.size(); ++m) {
    if (!raw[m].finite) break;
    // E[(X - mu)^m] = sum_i C(m,i) E[X^i] (-mu)^(m-i)
    double acc = 0.0;
    for (unsigned i = 0; i <= m; ++i) {
      acc += binom(m, i) * raw[i].value * ipow(-mu, static_cast<int>(m - i));
    }
    central[m] = MomentValue::of(acc);
  }
  return central;
}

}  // namespace

std::pair<MomentValue, MomentValue> skewness_kurtosis(const ALaw& law) {
  const auto central = central_from_raw(raw_moments_X(law, 4));
  MomentValue skew = MomentValue::infinite();
  MomentValue kurt = MomentValue::infinite();
  const double mu2 = central[2].value;
  if (central[3].finite && mu2 > 0.0) skew = MomentValue::of(central[3].value / std::pow(mu2, 1.5));
  if (central[4].finite && mu2 > 0.0) kurt = MomentValue::of(central[4].value / (mu2 * mu2));
  return {skew, kurt};
}

MomentReport moment_report(const ALaw& law) {
  MomentReport report{law, raw_moments_X(law, 4), {}, {}, {}, {}, {}};
  report.central = central_from_raw(report.raw);
  report.mean = report.raw[1];
  report.variance = report.central[2];
  auto [skew, kurt] = skewness_kurtosis(law);
  report.skewness = skew;
  report.kurtosis = kurt;
  return report;
}

double appendix_skew_formula(const ALaw& law) {
  const double p = law.real_param();
  switch (law.family()) {
    case Family::Poisson: {
      const double l = p;
      return ipow(l - 1, 3) * ipow(l * l + l - 1, 2) * (5 * l * l + 2 * l + 1) /
             (l * l * (ipow(l, 3) + 3 * l * l + l - 1));
    }
    case Family::Binomial: {
      const double n = static_cast<double>(law.int_param());
      const double num = ipow(n * p - 1, 3) * ipow(-n * n * p * p + n * (p - 1) * p + 1, 2) *
                         (4 * (n - 1) * n * ipow(p, 3) + n * (6 - 5 * n) * p * p - 2 * (n - 1) * p - 1);
      const double den = n * n * ipow(p - 1, 2) * p * p *
                         (ipow(n, 3) * ipow(p, 3) - 3 * n * n * (p - 1) * p * p +
                          n * (2 * p * p - 3 * p + 1) * p - 1);
      return -(num / den);
    }
    case Family::NegBinomial: {
      const double r = static_cast<double>(law.int_param());
      const double num =
          ipow(p * r + p - r, 3) * ipow(p * p * (r * r - 1) - p * r * (2 * r + 1) + r * (r + 1), 2) *
          (p * r * r * (-4 * r * r + r - 5) + r * (ipow(r, 3) + r + 2) +
           ipow(p, 3) * (-4 * ipow(r, 4) + 3 * ipow(r, 3) - 3 * r * r + 3 * r + 1) +
           ipow(p, 4) * (ipow(r, 4) - ipow(r, 3) + r - 1) +
           p * p * (6 * ipow(r, 4) - 3 * ipow(r, 3) + 7 * r * r - 6 * r + 1));
      const double den = ipow(p - 1, 2) * ipow(p, 3) * r * r *
                         (ipow(p, 3) * (r * r - r + 1) + p * p * r * (2 - 3 * r) + 3 * p * r * r -
                          r * (r + 1));
      return num / den;
    }
    case Family::Geometric:
      return ipow(2 - 3 * p, 2) * ipow(2 * p - 1, 3) * (6 * p * p - 13 * p + 8) /
             (ipow(p - 1, 2) * ipow(p, 3) * (2 * ipow(p, 3) - 7 * p * p + 12 * p - 6));
  }
  return 0.0;
}

double appendix_kurt_formula(const ALaw& law) {
  const double p = law.real_param();
  switch (law.family()) {
    case Family::Poisson: {
      const double l = p;
      return ipow(l - 1, 4) * ipow(l * l + l - 1, 3) *
             (3 * ipow(l, 6) - 25 * ipow(l, 5) - 55 * ipow(l, 4) - 32 * ipow(l, 3) - 47 * l * l -
              11 * l - 1) /
             (ipow(l, 3) * ipow(l + 1, 2) * (l * l + 2 * l - 1) * (ipow(l, 3) + 5 * l * l + 2 * l - 1));
    }
    case Family::Binomial: {
      const double n = static_cast<double>(law.int_param());
      const double poly =
          1 + (11 * n - 6) * p + (47 * n * n - 65 * n + 6) * p * p +
          n * (32 * n * n - 165 * n + 138) * ipow(p, 3) +
          n * (55 * ipow(n, 3) - 177 * n * n + 243 * n - 120) * ipow(p, 4) +
          n * (25 * ipow(n, 4) - 184 * ipow(n, 3) + 339 * n * n - 216 * n + 36) * ipow(p, 5) -
          3 * ipow(n - 1, 2) * n * n * (n * n + 4 * n - 12) * ipow(p, 7) +
          3 * n * n * (ipow(n, 4) + 10 * ipow(n, 3) - 62 * n * n + 93 * n - 42) * ipow(p, 6);
      const double num = ipow(n * p - 1, 4) * ipow(n * n * p * p - n * (p - 1) * p - 1, 3) * poly;
      const double den =
          ipow(n, 3) * ipow(p - 1, 3) * ipow(p, 3) *
          (ipow(n, 3) * ipow(p, 3) - 3 * n * n * (p - 1) * p * p + n * (2 * p * p - 3 * p + 1) * p - 1) *
          (ipow(n, 4) * ipow(p, 4) - 6 * ipow(n, 3) * (p - 1) * ipow(p, 3) +
           n * n * (11 * p * p - 18 * p + 7) * p * p +
           n * (-6 * ipow(p, 4) + 12 * ipow(p, 3) - 7 * p * p + p) - 1);
      return num / den;
    }
    case Family::NegBinomial: {
      const double r = static_cast<double>(law.int_param());
      const double poly =
          r * r * ipow(r + 1, 2) * (3 * ipow(r, 3) + 5 * r * r - 3 * r + 6) -
          2 * p * r * r * (12 * ipow(r, 5) + 32 * ipow(r, 4) + 24 * ipow(r, 3) + 16 * r * r + 15 * r + 3) +
          ipow(p, 3) * r *
              (-168 * ipow(r, 6) - 106 * ipow(r, 5) - 140 * ipow(r, 4) - 29 * ipow(r, 3) + 76 * r * r +
               35 * r + 10) +
          ipow(p, 6) * r *
              (84 * ipow(r, 6) - 211 * ipow(r, 5) + 238 * ipow(r, 4) - 126 * ipow(r, 3) + 98 * r * r -
               38 * r - 24) +
          p * p * r *
              (84 * ipow(r, 6) + 139 * ipow(r, 5) + 98 * ipow(r, 4) + 68 * ipow(r, 3) - 2 * r * r -
               18 * r + 6) +
          ipow(p, 4) * r *
              (210 * ipow(r, 6) - 85 * ipow(r, 5) + 210 * ipow(r, 4) - 103 * ipow(r, 3) - 9 * r * r -
               66 * r - 19) +
          ipow(p, 7) *
              (-24 * ipow(r, 7) + 86 * ipow(r, 6) - 108 * ipow(r, 5) + 39 * ipow(r, 4) +
               6 * ipow(r, 3) - 33 * r * r + 30 * r + 1) +
          ipow(p, 8) *
              (3 * ipow(r, 7) - 14 * ipow(r, 6) + 20 * ipow(r, 5) - 4 * ipow(r, 4) -
               16 * ipow(r, 3) + 20 * r * r - 7 * r - 2) -
          2 * ipow(p, 5) *
              (84 * ipow(r, 7) - 122 * ipow(r, 6) + 140 * ipow(r, 5) - 91 * ipow(r, 4) +
               66 * ipow(r, 3) - 50 * r * r - 2 * r - 1);
      const double num = ipow(p * r + p - r, 4) *
                         ipow(p * p * (r * r - 1) - p * r * (2 * r + 1) + r * (r + 1), 3) * poly;
      const double den =
          ipow(p - 1, 3) * ipow(p, 4) * ipow(r, 3) *
          (ipow(p, 3) * (r * r - r + 1) + p * p * r * (2 - 3 * r) + 3 * p * r * r - r * (r + 1)) *
          (ipow(p, 3) * r * (-4 * r * r + 6 * r - 3) + r * (r * r + 3 * r + 2) -
           ipow(p, 4) * (ipow(r, 3) - 3 * r * r + 2 * r - 1) + p * p * (6 * ipow(r, 3) + r) +
           2 * p * r * (2 * r * r + 3 * r + 1));
      return -(num / den);
    }
    case Family::Geometric:
      return ipow(1 - 2 * p, 4) * ipow(3 * p - 2, 3) *
             (42 * ipow(p, 6) - 173 * ipow(p, 5) + 105 * ipow(p, 4) + 435 * ipow(p, 3) -
              872 * p * p + 642 * p - 180) /
             (ipow(p - 1, 3) * ipow(p, 4) * (2 * ipow(p, 3) - 7 * p * p + 12 * p - 6) *
              (15 * ipow(p, 3) - 50 * p * p + 60 * p - 24));
  }
  return 0.0;
}

}  // namespace cpdist
