#include "cpdist/export.hpp"

#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <ostream>

namespace cpdist {

namespace {

using nlohmann::json;

json params_object(Family family, double real, std::int64_t integer) {
  switch (family) {
    case Family::Poisson:
      return {{"lambda", real}};
    case Family::Binomial:
      return {{"n", integer}, {"p", real}};
    case Family::NegBinomial:
      return {{"r", integer}, {"p", real}};
    case Family::Geometric:
      return {{"p", real}};
  }
  return json::object();
}

json moment_json(const MomentValue& m) {
  if (m.finite && std::isfinite(m.value)) return m.value;
  return nullptr;
}

json optional_number(const std::optional<double>& v) {
  if (v && std::isfinite(*v)) return *v;
  return nullptr;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string params_json(const ALaw& law) {
  return params_object(law.family(), law.real_param(), law.int_param()).dump();
}

void write_density_csv(std::ostream& out, const CpDensity& density) {
  out << "n,prob\n";
  const auto probs = density.probs();
  for (std::size_t k = 0; k < probs.size(); ++k) out << (k + 1) << ',' << format_double(probs[k]) << '\n';
}

std::string density_json(const CpDensity& density) {
  const auto probs = density.probs();
  json doc = {
      {"family", family_name(density.law().family())},
      {"params", params_object(density.law().family(), density.law().real_param(), density.law().int_param())},
      {"limit", density.limit()},
      {"tail_mass", density.tail_mass()},
      {"probs", std::vector<double>(probs.begin(), probs.end())},
  };
  return doc.dump();
}

std::string moments_json(const MomentReport& report) {
  json raw = json::array();
  json raw_finite = json::array();
  for (const auto& m : report.raw) {
    raw.push_back(moment_json(m));
    raw_finite.push_back(m.finite);
  }
  json central = json::array();
  for (const auto& m : report.central) central.push_back(moment_json(m));
  json doc = {
      {"family", family_name(report.law.family())},
      {"params", params_object(report.law.family(), report.law.real_param(), report.law.int_param())},
      {"raw", raw},
      {"raw_finite", raw_finite},
      {"central", central},
      {"mean", moment_json(report.mean)},
      {"variance", moment_json(report.variance)},
      {"skewness", moment_json(report.skewness)},
      {"kurtosis", moment_json(report.kurtosis)},
      {"finite", {{"mean", report.mean.finite},
                  {"variance", report.variance.finite},
                  {"skewness", report.skewness.finite},
                  {"kurtosis", report.kurtosis.finite}}},
  };
  return doc.dump(2);
}

std::string fits_json(std::span<const FitResult> fits) {
  json arr = json::array();
  for (const auto& fit : fits) {
    json diag = {
        {"boundary", fit.diagnostics.boundary},
        {"degenerate", fit.diagnostics.degenerate},
        {"int_max_exhausted", fit.diagnostics.int_max_exhausted},
    };
    if (fit.diagnostics.raw_integer_estimate) diag["raw_integer_estimate"] = *fit.diagnostics.raw_integer_estimate;
    if (!fit.diagnostics.note.empty()) diag["note"] = fit.diagnostics.note;
    arr.push_back({
        {"family", family_name(fit.family)},
        {"method", method_name(fit.method)},
        {"params", params_object(fit.family, fit.real_param, fit.int_param)},
        {"loglik", optional_number(fit.loglik)},
        {"aic", optional_number(fit.aic)},
        {"diagnostics", diag},
    });
  }
  return arr.dump(2);
}

void write_bench_csv(std::ostream& out, const BenchReport& report, bool header) {
  if (header) out << "limit,seconds,pair_visits,method\n";
  for (const auto& row : report.rows) {
    out << row.limit << ',' << format_double(row.seconds) << ',' << row.work << ','
        << bench_method_name(report.method) << '\n';
  }
}

}  // namespace cpdist
