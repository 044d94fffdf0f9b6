#include <nlohmann/json.hpp>
#include <sstream>

#include "cpdist/export.hpp"
#include "doctest.h"

using namespace cpdist;
using nlohmann::json;

TEST_CASE("CSV and JSON density exports carry identical values") {
  const auto d = cp_density(ALaw::negbinomial(2, 0.85), 500);
  std::stringstream csv;
  write_density_csv(csv, d);
  const json doc = json::parse(density_json(d));
  CHECK(doc["family"] == "negbinomial");
  CHECK(doc["params"]["r"] == 2);
  CHECK(doc["limit"] == 500);
  CHECK(doc["tail_mass"].get<double>() == d.tail_mass());

  std::string line;
  std::getline(csv, line);
  CHECK(line == "n,prob");
  std::size_t n = 0;
  while (std::getline(csv, line)) {
    const auto comma = line.find(',');
    CHECK(std::stoul(line.substr(0, comma)) == n + 1);
    const double from_csv = std::stod(line.substr(comma + 1));
    const double from_json = doc["probs"][n].get<double>();
    CHECK(from_csv == from_json);
    CHECK(from_csv == d.prob(static_cast<std::uint32_t>(n + 1)));
    ++n;
  }
  CHECK(n == 500);
}

TEST_CASE("format_double round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 6.02214076e23, 5e-324, 0.60653065971263342}) {
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
}

TEST_CASE("moment JSON marks divergent moments as null") {
  const json doc = json::parse(moments_json(moment_report(ALaw::geometric(0.6))));
  CHECK(doc["mean"].get<double>() == doctest::Approx(3.0));
  CHECK(doc["variance"].is_null());
  CHECK(doc["finite"]["variance"] == false);
  CHECK(doc["raw_finite"][1] == true);
  CHECK(doc["raw"][0] == 1.0);
}

TEST_CASE("fit JSON") {
  FitResult fit;
  fit.family = Family::Binomial;
  fit.method = Method::MLE;
  fit.int_param = 2;
  fit.real_param = 0.37;
  fit.loglik = -10.0;
  fit.aic = 24.0;
  const json doc = json::parse(fits_json(std::span<const FitResult>(&fit, 1)));
  CHECK(doc[0]["family"] == "binomial");
  CHECK(doc[0]["method"] == "mle");
  CHECK(doc[0]["params"]["n"] == 2);
  CHECK(doc[0]["aic"] == 24.0);
}
