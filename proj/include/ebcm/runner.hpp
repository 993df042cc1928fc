#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ebcm/geometry.hpp"
#include "ebcm/scheduler.hpp"

namespace ebcm {

// Complete description of one experiment. Defaults describe the baseline
// two-slit run: random per-photon source, a million photons, slow detector
// memory. Validation happens at load/override time, never inside the event
// loop.
struct ExperimentConfig {
  Geometry geometry{};
  PhysicalLengths physical{};
  SourceMode mode = SourceMode::random();
  std::uint64_t photons = 1'000'000;   // M
  double gamma = 0.999;                // detector memory weight
  double threshold = 0.25;             // click threshold T
  std::uint64_t seed = 1;
  std::uint32_t replicas = 1;

  bool operator==(const ExperimentConfig&) const = default;
};

// Throws ConfigError naming the offending field and its bounds.
void validate(const ExperimentConfig& config);

// Per-pixel histograms plus run bookkeeping for one experiment. The analytic
// columns carry the two reference curves sampled at the pixel centres and
// peak-normalized over the grid, ready to overlay on normalized_clicks.
struct ResultsTable {
  ExperimentConfig config;
  std::vector<double> theta_center;            // [rad]
  std::vector<std::uint64_t> arrivals;
  std::vector<std::uint64_t> clicks;
  std::vector<double> normalized_clicks;       // zeros when empty_run
  std::vector<double> analytic_two_slit;
  std::vector<double> analytic_switched;
  std::uint64_t discarded = 0;                 // rays outside the arc
  std::uint64_t emitted_s1 = 0;
  std::uint64_t emitted_s2 = 0;
  bool empty_run = false;                      // no pixel clicked
  double wall_seconds = 0.0;
  double events_per_second = 0.0;

  std::uint64_t total_arrivals() const;
  std::uint64_t total_clicks() const;
};

// Runs the M-photon event loop: pick slit, sample emission, trace to a
// pixel, compute the phase, update the detector element. Deterministic:
// identical config (including seed) gives identical histograms.
// Precondition: config validated.
ResultsTable run_experiment(const ExperimentConfig& config);

// config.replicas independent runs; replica r uses seed + r. Replicas run
// concurrently and are returned in replica order.
std::vector<ResultsTable> run_replicas(const ExperimentConfig& config);

// One sweep point: a block size / gamma combination with its derived seed.
// On validation failure `error` is set and `tables` stays empty.
struct SweepPoint {
  std::uint64_t block_size = 0;
  double gamma = 0.0;
  std::uint64_t seed = 0;
  std::vector<ResultsTable> tables;
  std::string error;
};

// Cartesian sweep over AlternatingBlocks sizes and gamma values (block sizes
// outer, gammas inner). Point i gets seed derive_seed(base.seed, i) so no two
// points share a stream; per-point validation failures are recorded and the
// sweep continues. Points and replicas execute concurrently; the returned
// order is the deterministic enumeration order.
std::vector<SweepPoint> run_sweep(const ExperimentConfig& base,
                                  const std::vector<std::uint64_t>& block_sizes,
                                  const std::vector<double>& gammas);

}  // namespace ebcm
