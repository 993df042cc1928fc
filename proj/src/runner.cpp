#include "ebcm/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>

#include "ebcm/analytic.hpp"
#include "ebcm/detector.hpp"
#include "ebcm/errors.hpp"
#include "ebcm/rng.hpp"
#include "ebcm/stats.hpp"

namespace ebcm {

namespace {

void check_range(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

// Runs fn(i) for i in [0, jobs) on up to hardware_concurrency threads. Each
// job writes only its own output slot, so results are independent of
// scheduling order.
void parallel_for(std::size_t jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1) {
    for (std::size_t i = 0; i < jobs; ++i) fn(i);
    return;
  }
  const std::size_t workers =
      std::min<std::size_t>(jobs, std::max(1u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < jobs; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

void validate(const ExperimentConfig& config) {
  const Geometry& g = config.geometry;
  check_range(g.slit_width > 0.0, "slit width a must be > 0");
  check_range(g.slit_separation > g.slit_width, "slit separation d must exceed slit width a");
  check_range(g.wavelength > 0.0, "lambda must be > 0");
  check_range(g.detector_radius > g.slit_separation,
              "detector radius X must exceed slit separation d");
  check_range(g.n_pixels >= 3, "n_pixels must be >= 3");
  check_range(g.theta_min < g.theta_max, "theta_min must be < theta_max");
  check_range(g.theta_min >= -kHalfPi && g.theta_max <= kHalfPi,
              "detector arc must lie in the forward half-plane [-pi/2, pi/2]");
  check_range(config.gamma > 0.0 && config.gamma < 1.0, "gamma must lie in (0,1)");
  check_range(config.threshold > 0.0 && config.threshold < 1.0,
              "threshold must lie in (0,1)");
  check_range(config.photons >= 1, "M must be >= 1");
  check_range(config.replicas >= 1, "replicas must be >= 1");
  if (config.mode.kind == SourceMode::Kind::AlternatingBlocks) {
    check_range(config.mode.block_size >= 1, "N must be >= 1");
    check_range(config.mode.block_size <= config.photons, "N must be <= M");
  }
}

std::uint64_t ResultsTable::total_arrivals() const {
  return std::accumulate(arrivals.begin(), arrivals.end(), std::uint64_t{0});
}

std::uint64_t ResultsTable::total_clicks() const {
  return std::accumulate(clicks.begin(), clicks.end(), std::uint64_t{0});
}

ResultsTable run_experiment(const ExperimentConfig& config) {
  const Geometry& geom = config.geometry;
  const auto n = static_cast<std::size_t>(geom.n_pixels);

  ResultsTable table;
  table.config = config;
  table.theta_center.resize(n);
  for (int k = 0; k < geom.n_pixels; ++k) {
    table.theta_center[static_cast<std::size_t>(k)] = geom.pixel_theta_center(k);
  }
  table.arrivals.assign(n, 0);
  table.clicks.assign(n, 0);

  std::vector<PixelState> pixels(n);
  Rng rng(config.seed);
  SourceState source{config.mode};

  const auto start = std::chrono::steady_clock::now();
  for (std::uint64_t i = 0; i < config.photons; ++i) {
    const Slit slit = next_slit(source, rng);
    PhotonMessage msg = sample_emission(slit, geom, rng);
    ++source.emitted_total;
    (slit == Slit::S1 ? table.emitted_s1 : table.emitted_s2) += 1;

    const auto hit = trace_to_pixel(msg, geom);
    if (!hit) {
      ++table.discarded;
      continue;
    }
    msg.path_length = hit->path_length;
    msg.phase = message_phase(msg.path_length, geom.wavelength);
    register_arrival(pixels[static_cast<std::size_t>(hit->pixel_index)], msg.phase,
                     config.gamma, config.threshold);
  }
  const auto stop = std::chrono::steady_clock::now();
  table.wall_seconds = std::chrono::duration<double>(stop - start).count();
  table.events_per_second =
      static_cast<double>(config.photons) / std::max(table.wall_seconds, 1e-12);

  std::uint64_t peak = 0;
  for (std::size_t k = 0; k < n; ++k) {
    table.arrivals[k] = pixels[k].arrivals;
    table.clicks[k] = pixels[k].clicks;
    peak = std::max(peak, pixels[k].clicks);
  }
  table.empty_run = peak == 0;
  table.normalized_clicks.assign(n, 0.0);
  if (!table.empty_run) {
    for (std::size_t k = 0; k < n; ++k) {
      table.normalized_clicks[k] =
          static_cast<double>(table.clicks[k]) / static_cast<double>(peak);
    }
  }

  const SlitParams params = slit_params(geom);
  std::vector<double> two(n);
  std::vector<double> switched(n);
  for (std::size_t k = 0; k < n; ++k) {
    two[k] = two_slit_intensity(table.theta_center[k], params);
    switched[k] = switched_slits_prediction(table.theta_center[k], params);
  }
  table.analytic_two_slit = normalize_peak(two);
  table.analytic_switched = normalize_peak(switched);
  return table;
}

std::vector<ResultsTable> run_replicas(const ExperimentConfig& config) {
  std::vector<ResultsTable> tables(config.replicas);
  parallel_for(config.replicas, [&](std::size_t r) {
    ExperimentConfig replica = config;
    replica.seed = config.seed + r;
    tables[r] = run_experiment(replica);
  });
  return tables;
}

std::vector<SweepPoint> run_sweep(const ExperimentConfig& base,
                                  const std::vector<std::uint64_t>& block_sizes,
                                  const std::vector<double>& gammas) {
  if (block_sizes.empty() || gammas.empty()) {
    throw ConfigError("sweep requires at least one block size and one gamma");
  }

  std::vector<SweepPoint> points;
  points.reserve(block_sizes.size() * gammas.size());
  std::vector<ExperimentConfig> configs;
  for (const std::uint64_t n : block_sizes) {
    for (const double gamma : gammas) {
      SweepPoint point;
      point.block_size = n;
      point.gamma = gamma;
      point.seed = derive_seed(base.seed, points.size());

      ExperimentConfig config = base;
      config.mode = SourceMode::alternating(n);
      config.gamma = gamma;
      config.seed = point.seed;
      try {
        validate(config);
      } catch (const ConfigError& err) {
        std::ostringstream msg;
        msg << "N=" << n << " gamma=" << gamma << ": " << err.what();
        point.error = msg.str();
      }
      points.push_back(std::move(point));
      configs.push_back(config);
    }
  }

  // Flatten (point, replica) pairs into one job list.
  struct Job {
    std::size_t point;
    std::uint32_t replica;
  };
  std::vector<Job> jobs;
  for (std::size_t p = 0; p < points.size(); ++p) {
    if (!points[p].error.empty()) continue;
    points[p].tables.resize(base.replicas);
    for (std::uint32_t r = 0; r < base.replicas; ++r) jobs.push_back({p, r});
  }
  parallel_for(jobs.size(), [&](std::size_t j) {
    ExperimentConfig config = configs[jobs[j].point];
    config.seed += jobs[j].replica;
    points[jobs[j].point].tables[jobs[j].replica] = run_experiment(config);
  });
  return points;
}

}  // namespace ebcm
