#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "cpdist/bench.hpp"
#include "cpdist/density.hpp"
#include "cpdist/estimate.hpp"
#include "cpdist/moments.hpp"

namespace cpdist {

/// Round-trip-safe decimal form (17 significant digits).
std::string format_double(double v);

/// Parameters of a law as a JSON object string, e.g. {"n":2,"p":0.37}.
std::string params_json(const ALaw& law);

void write_density_csv(std::ostream& out, const CpDensity& density);
/// {"family":..., "params":{...}, "limit":N, "tail_mass":t, "probs":[P(X=1), ...]}
std::string density_json(const CpDensity& density);

/// Raw and central moments with finiteness flags; infinite entries are null.
std::string moments_json(const MomentReport& report);

std::string fits_json(std::span<const FitResult> fits);

/// `limit,seconds,pair_visits,method` rows (header included).
void write_bench_csv(std::ostream& out, const BenchReport& report, bool header = true);

}  // namespace cpdist
