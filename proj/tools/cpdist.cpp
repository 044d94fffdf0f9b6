// cpdist: density, sampling, moments, fitting and timing for the
// compound-product law X = 1 + A1 + A1 A2 + ...

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cpdist/cpdist.hpp"

namespace {

using namespace cpdist;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LawFlags {
  std::string family;
  std::optional<double> lambda;
  std::optional<double> p;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> r;

  void attach(CLI::App* cmd, bool required = true) {
    auto* f = cmd->add_option("--family", family, "poisson | binomial | negbinomial | geometric");
    if (required) f->required();
    cmd->add_option("--lambda", lambda, "Poisson rate");
    cmd->add_option("--p", p, "success probability (binomial, negbinomial, geometric)");
    cmd->add_option("--n", n, "binomial number of trials");
    cmd->add_option("--r", r, "negative binomial number of successes");
  }

  ALaw build() const {
    try {
      switch (parse_family(family)) {
        case Family::Poisson:
          if (!lambda) throw UsageError("poisson requires --lambda");
          return ALaw::poisson(*lambda);
        case Family::Binomial:
          if (!n || !p) throw UsageError("binomial requires --n and --p");
          return ALaw::binomial(*n, *p);
        case Family::NegBinomial:
          if (!r || !p) throw UsageError("negbinomial requires --r and --p");
          return ALaw::negbinomial(*r, *p);
        case Family::Geometric:
          if (!p) throw UsageError("geometric requires --p");
          return ALaw::geometric(*p);
      }
    } catch (const ParameterError& e) {
      throw UsageError(e.what());
    }
    throw UsageError("unknown family");
  }
};

struct DataFlags {
  std::string input;
  std::string text;
  bool keep_case = false;
  std::uint64_t min_count = 1;

  void attach(CLI::App* cmd) {
    auto* in = cmd->add_option("--input", input, "CSV of value,count records");
    auto* tx = cmd->add_option("--text", text, "raw UTF-8 text; observations are per-word occurrence counts");
    in->excludes(tx);
    cmd->add_flag("--keep-case", keep_case, "do not case-fold tokens (text mode)");
    cmd->add_option("--min-count", min_count, "drop words seen fewer times (text mode)")->check(CLI::PositiveNumber);
  }

  FrequencyDataset load() const {
    if (input.empty() && text.empty()) throw UsageError("one of --input or --text is required");
    if (!text.empty()) {
      CorpusConfig cfg;
      cfg.lowercase = !keep_case;
      cfg.min_count = min_count;
      return word_counts_file(text, cfg);
    }
    auto data = read_counts_file(input);
    if (data.empty()) throw DomainError("input '" + input + "' holds no observations");
    return data;
  }
};

// Writes to --output when given, else stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error("cannot open output '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

SearchOptions search_options(std::int64_t int_max, double tol, unsigned threads) {
  if (int_max < 1) throw UsageError("--int-max must be >= 1");
  if (!(tol > 0.0)) throw UsageError("--tol must be > 0");
  SearchOptions s;
  s.int_max = int_max;
  s.tol = tol;
  s.threads = threads;
  return s;
}

std::vector<std::uint32_t> parse_limits(const std::string& csv) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size() || v == 0 || v > kMaxDensityLimit) throw std::out_of_range("limit");
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw UsageError("invalid limit '" + item + "'");
    }
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] <= out[i - 1]) throw UsageError("limits must be strictly increasing");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compound-product distribution toolkit: X = AX + 1 with P(A=0) > 0"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output;
  app.add_option("-o,--output", output, "write data to this file instead of stdout");

  // density
  auto* density_cmd = app.add_subcommand("density", "P(X=n) for n = 1..limit");
  LawFlags density_law;
  density_law.attach(density_cmd);
  std::uint32_t density_limit = 10000;
  std::string density_format = "csv";
  bool compensated = false;
  bool bruteforce = false;
  density_cmd->add_option("--limit", density_limit, "largest n")->check(CLI::Range(1u, kMaxDensityLimit));
  density_cmd->add_option("--format", density_format)->check(CLI::IsMember({"csv", "json"}));
  density_cmd->add_flag("--compensated", compensated, "Neumaier summation in the recursion");
  density_cmd->add_flag("--bruteforce", bruteforce, "use chain enumeration (limit <= 14)");

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "draw variates of X");
  LawFlags sample_law;
  sample_law.attach(sample_cmd);
  std::size_t sample_count = 1;
  std::uint64_t seed = 0;
  std::uint64_t max_steps = 1'000'000;
  bool saturate = false;
  bool histogram = false;
  sample_cmd->add_option("--count", sample_count)->required()->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", seed);
  sample_cmd->add_option("--max-steps", max_steps)->check(CLI::PositiveNumber);
  sample_cmd->add_flag("--saturate", saturate, "emit 18446744073709551615 instead of failing on overflow");
  sample_cmd->add_flag("--histogram", histogram, "emit value,count rows instead of one value per line");

  // moments
  auto* moments_cmd = app.add_subcommand("moments", "raw and central moments of X (JSON)");
  LawFlags moments_law;
  moments_law.attach(moments_cmd);

  // fit
  auto* fit_cmd = app.add_subcommand("fit", "estimate parameters from count data (JSON)");
  std::string fit_family;
  std::string fit_method = "mixed";
  DataFlags fit_data;
  std::int64_t int_max = 50;
  double tol = 1e-6;
  unsigned threads = 0;
  fit_cmd->add_option("--family", fit_family, "family name or 'all'")
      ->required()
      ->check(CLI::IsMember({"poisson", "binomial", "negbinomial", "geometric", "all"}));
  fit_cmd->add_option("--method", fit_method, "mom | mle | mixed")->check(CLI::IsMember({"mom", "mle", "mixed"}));
  fit_data.attach(fit_cmd);
  fit_cmd->add_option("--int-max", int_max, "largest n or r scanned by MLE");
  fit_cmd->add_option("--tol", tol, "golden-section tolerance on p or lambda");
  fit_cmd->add_option("--threads", threads, "worker threads for the integer scan (0: CPDIST_THREADS)");

  // compare
  auto* compare_cmd = app.add_subcommand("compare", "fit all four families and rank by AIC (JSON)");
  DataFlags compare_data;
  std::string compare_mode = "mixed";
  compare_data.attach(compare_cmd);
  compare_cmd->add_option("--mode", compare_mode, "mixed | mle")->check(CLI::IsMember({"mixed", "mle"}));
  compare_cmd->add_option("--int-max", int_max);
  compare_cmd->add_option("--tol", tol);
  compare_cmd->add_option("--threads", threads);

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "time the recursion and the enumeration oracle (CSV)");
  LawFlags bench_law;
  bench_law.attach(bench_cmd, false);
  std::string limits = "1000,10000,100000,1000000";
  std::string brute_limits;
  int runs = 3;
  bench_cmd->add_option("--limits", limits, "comma-separated, strictly increasing");
  bench_cmd->add_option("--bruteforce-limits", brute_limits, "comma-separated, each <= 14");
  bench_cmd->add_option("--runs", runs, "runs per limit; the median is reported")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*density_cmd) {
      const ALaw law = density_law.build();
      if (bruteforce && density_limit > kMaxBruteforceLimit) {
        throw UsageError("--bruteforce supports --limit <= " + std::to_string(kMaxBruteforceLimit));
      }
      const CpDensity d = bruteforce ? cp_density_bruteforce(law, density_limit)
                                     : cp_density(law, density_limit, DensityOptions{compensated});
      Sink sink(output);
      if (density_format == "csv") {
        write_density_csv(sink.stream(), d);
      } else {
        sink.stream() << density_json(d) << '\n';
      }
      std::cerr << "tail_mass=" << format_double(d.tail_mass()) << '\n';
    } else if (*sample_cmd) {
      const ALaw law = sample_law.build();
      Sampler sampler(law, {seed, max_steps, saturate ? OverflowPolicy::Saturate : OverflowPolicy::Error});
      Sink sink(output);
      if (histogram) {
        std::map<std::uint64_t, std::uint64_t> counts;
        for (std::size_t i = 0; i < sample_count; ++i) ++counts[sampler.next()];
        sink.stream() << "value,count\n";
        for (const auto& [v, c] : counts) sink.stream() << v << ',' << c << '\n';
      } else {
        for (std::size_t i = 0; i < sample_count; ++i) sink.stream() << sampler.next() << '\n';
      }
    } else if (*moments_cmd) {
      const ALaw law = moments_law.build();
      Sink sink(output);
      sink.stream() << moments_json(moment_report(law)) << '\n';
    } else if (*fit_cmd) {
      const SearchOptions search = search_options(int_max, tol, threads);
      const FrequencyDataset data = fit_data.load();
      std::vector<FitResult> fits;
      if (fit_family == "all" && fit_method != "mom") {
        fits = compare_models(data, fit_method == "mixed" ? CompareMode::Mixed : CompareMode::AllMle, search);
      } else {
        std::vector<Family> families;
        if (fit_family == "all") {
          families.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
        } else {
          families.push_back(parse_family(fit_family));
        }
        for (Family family : families) {
          const bool by_moments =
              fit_method == "mom" ||
              (fit_method == "mixed" && (family == Family::Poisson || family == Family::Geometric));
          try {
            FitResult fit = by_moments ? mom_fit(data, family) : mle_fit(data, family, search);
            if (!fit.loglik) evaluate_fit(data, fit);
            fits.push_back(std::move(fit));
          } catch (const MomentConditionError& e) {
            if (families.size() == 1) throw;
            std::cerr << "warning: " << e.what() << '\n';
          }
        }
      }
      Sink sink(output);
      sink.stream() << fits_json(fits) << '\n';
    } else if (*compare_cmd) {
      const SearchOptions search = search_options(int_max, tol, threads);
      const FrequencyDataset data = compare_data.load();
      const auto fits =
          compare_models(data, compare_mode == "mixed" ? CompareMode::Mixed : CompareMode::AllMle, search);
      Sink sink(output);
      sink.stream() << fits_json(fits) << '\n';
    } else if (*bench_cmd) {
      const ALaw law = bench_law.family.empty() ? ALaw::poisson(0.5) : bench_law.build();
      const auto rec_limits = parse_limits(limits);
      const auto bf_limits = parse_limits(brute_limits);
      for (auto l : bf_limits) {
        if (l > kMaxBruteforceLimit) throw UsageError("--bruteforce-limits entries must be <= 14");
      }
      BenchOptions options;
      options.runs = runs;
      Sink sink(output);
      write_bench_csv(sink.stream(), bench_density(law, rec_limits, options));
      if (!bf_limits.empty()) {
        options.min_run_seconds = 0.01;
        write_bench_csv(sink.stream(), bench_bruteforce(law, bf_limits, options), false);
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
