#include <algorithm>
#include <cmath>
#include <string>

#include <doctest.h>

#include "ebcm/errors.hpp"
#include "ebcm/results_io.hpp"
#include "ebcm/rng.hpp"
#include "ebcm/runner.hpp"

using ebcm::ExperimentConfig;
using ebcm::ResultsTable;
using ebcm::SourceMode;

namespace {

ExperimentConfig small_config(std::uint64_t photons = 100000) {
  ExperimentConfig config;
  config.photons = photons;
  config.seed = 77;
  config.gamma = 0.9;  // short memory so clicks show up at small M
  return config;
}

bool message_mentions(const ebcm::ConfigError& err, const std::string& needle) {
  return std::string(err.what()).find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("validation names the offending field") {
  ExperimentConfig config = small_config();

  config.gamma = 1.2;
  try {
    ebcm::validate(config);
    FAIL("gamma=1.2 must be rejected");
  } catch (const ebcm::ConfigError& err) {
    CHECK(message_mentions(err, "gamma"));
    CHECK(message_mentions(err, "(0,1)"));
  }
  config.gamma = 0.999;

  config.threshold = 0.0;
  CHECK_THROWS_AS(ebcm::validate(config), ebcm::ConfigError);
  config.threshold = 0.25;

  config.mode = SourceMode::alternating(config.photons + 1);
  try {
    ebcm::validate(config);
    FAIL("N > M must be rejected");
  } catch (const ebcm::ConfigError& err) {
    CHECK(message_mentions(err, "N"));
  }
  config.mode = SourceMode::random();

  config.geometry.n_pixels = 2;
  CHECK_THROWS_AS(ebcm::validate(config), ebcm::ConfigError);
  config.geometry.n_pixels = 181;

  config.geometry.detector_radius = 4.0;
  CHECK_THROWS_AS(ebcm::validate(config), ebcm::ConfigError);
  config.geometry.detector_radius = 50000.0 / 670.0;

  CHECK_NOTHROW(ebcm::validate(config));
}

TEST_CASE("zero-photon override yields an all-zero table") {
  ExperimentConfig config = small_config(0);  // validation relaxed here on purpose
  const ResultsTable table = ebcm::run_experiment(config);
  CHECK(table.empty_run);
  CHECK(table.total_arrivals() == 0);
  CHECK(table.total_clicks() == 0);
  CHECK(table.discarded == 0);
  CHECK(std::all_of(table.normalized_clicks.begin(), table.normalized_clicks.end(),
                    [](double v) { return v == 0.0; }));
}

TEST_CASE("every emitted photon is accounted for") {
  const ResultsTable table = ebcm::run_experiment(small_config());
  CHECK(table.total_arrivals() + table.discarded == table.config.photons);
  CHECK(table.emitted_s1 + table.emitted_s2 == table.config.photons);

  // narrow arc: same conservation with a non-zero discard tally
  ExperimentConfig narrow = small_config();
  narrow.geometry.theta_min = -ebcm::kHalfPi / 2;
  narrow.geometry.theta_max = ebcm::kHalfPi / 2;
  narrow.geometry.n_pixels = 91;
  const ResultsTable clipped = ebcm::run_experiment(narrow);
  CHECK(clipped.discarded > 0);
  CHECK(clipped.total_arrivals() + clipped.discarded == narrow.photons);
}

TEST_CASE("identical config and seed give byte-identical output") {
  const ResultsTable a = ebcm::run_experiment(small_config());
  const ResultsTable b = ebcm::run_experiment(small_config());
  CHECK(a.clicks == b.clicks);
  CHECK(a.arrivals == b.arrivals);
  CHECK(ebcm::csv_string(a) == ebcm::csv_string(b));

  ExperimentConfig other = small_config();
  other.seed = 78;
  const ResultsTable c = ebcm::run_experiment(other);
  CHECK(a.clicks != c.clicks);
}

TEST_CASE("normalized clicks peak at exactly one") {
  const ResultsTable table = ebcm::run_experiment(small_config());
  REQUIRE(!table.empty_run);
  CHECK(*std::max_element(table.normalized_clicks.begin(),
                          table.normalized_clicks.end()) == 1.0);
}

TEST_CASE("alternating bookkeeping matches the block arithmetic") {
  ExperimentConfig config = small_config(10000);
  config.mode = SourceMode::alternating(1000);
  const ResultsTable table = ebcm::run_experiment(config);
  CHECK(table.emitted_s1 == 5000);
  CHECK(table.emitted_s2 == 5000);

  config.mode = SourceMode::alternating(10000);  // single block, S1 only
  const ResultsTable single = ebcm::run_experiment(config);
  CHECK(single.emitted_s1 == 10000);
  CHECK(single.emitted_s2 == 0);
}

TEST_CASE("replicas use consecutive seeds and preserve order") {
  ExperimentConfig config = small_config(20000);
  config.replicas = 3;
  const auto tables = ebcm::run_replicas(config);
  REQUIRE(tables.size() == 3);
  for (std::size_t r = 0; r < 3; ++r) {
    CHECK(tables[r].config.seed == config.seed + r);
  }
  CHECK(tables[0].clicks == ebcm::run_experiment(config).clicks);
  CHECK(tables[0].clicks != tables[1].clicks);
}

TEST_CASE("singleton sweep reduces to a single derived-seed run") {
  ExperimentConfig base = small_config(20000);
  const auto points = ebcm::run_sweep(base, {1}, {0.999});
  REQUIRE(points.size() == 1);
  REQUIRE(points[0].error.empty());
  REQUIRE(points[0].tables.size() == 1);
  CHECK(points[0].seed == ebcm::derive_seed(base.seed, 0));

  ExperimentConfig expected = base;
  expected.mode = SourceMode::alternating(1);
  expected.gamma = 0.999;
  expected.seed = points[0].seed;
  CHECK(points[0].tables[0].clicks == ebcm::run_experiment(expected).clicks);
}

TEST_CASE("sweep records invalid points and keeps going") {
  ExperimentConfig base = small_config(20000);
  base.replicas = 2;
  const auto points = ebcm::run_sweep(base, {1, 50000}, {0.999, 1.5});
  REQUIRE(points.size() == 4);
  // order: (1, 0.999), (1, 1.5), (50000, 0.999), (50000, 1.5)
  CHECK(points[0].error.empty());
  CHECK(points[0].tables.size() == 2);
  CHECK(!points[1].error.empty());
  CHECK(points[1].tables.empty());
  CHECK(!points[2].error.empty());  // N > M
  CHECK(!points[3].error.empty());

  // distinct derived seeds per point
  CHECK(points[0].seed != points[1].seed);
  CHECK(points[1].seed != points[2].seed);

  CHECK_THROWS_AS(ebcm::run_sweep(base, {}, {0.9}), ebcm::ConfigError);
}

TEST_CASE("event loop throughput stays above the CI floor") {
  const ResultsTable table = ebcm::run_experiment(small_config(200000));
  CHECK(table.events_per_second >= 1e5);
}

TEST_CASE("analytic columns are peak-normalized on the pixel grid") {
  const ResultsTable table = ebcm::run_experiment(small_config(1000));
  CHECK(*std::max_element(table.analytic_two_slit.begin(),
                          table.analytic_two_slit.end()) == 1.0);
  CHECK(*std::max_element(table.analytic_switched.begin(),
                          table.analytic_switched.end()) == 1.0);
}
