#include "ebcm/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ebcm/errors.hpp"

namespace ebcm {

namespace {

std::vector<double> sample_normalized(const std::function<double(double)>& reference,
                                      const Geometry& geom) {
  std::vector<double> ref(static_cast<std::size_t>(geom.n_pixels));
  for (int k = 0; k < geom.n_pixels; ++k) {
    ref[static_cast<std::size_t>(k)] = reference(geom.pixel_theta_center(k));
  }
  return normalize_peak(ref);
}

}  // namespace

std::vector<double> normalize_peak(std::span<const double> values) {
  const double peak = values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
  if (peak <= 0.0) throw EmptyRunError("normalize_peak: no positive values to normalize");
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i] / peak;
  return out;
}

std::vector<double> normalize_peak(std::span<const std::uint64_t> counts) {
  std::vector<double> as_double(counts.begin(), counts.end());
  return normalize_peak(std::span<const double>(as_double));
}

double rms_error(std::span<const double> sim_normalized,
                 const std::function<double(double)>& reference, const Geometry& geom) {
  if (static_cast<int>(sim_normalized.size()) != geom.n_pixels) {
    throw std::invalid_argument("rms_error: pixel count mismatch");
  }
  const std::vector<double> ref = sample_normalized(reference, geom);
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < sim_normalized.size(); ++i) {
    const double diff = sim_normalized[i] - ref[i];
    sum_sq += diff * diff;
  }
  return std::sqrt(sum_sq / static_cast<double>(sim_normalized.size()));
}

double fringe_visibility(std::span<const double> sim_normalized, const Geometry& geom,
                         const SlitParams& params) {
  if (static_cast<int>(sim_normalized.size()) != geom.n_pixels) {
    throw std::invalid_argument("fringe_visibility: pixel count mismatch");
  }
  const double sin_window = 1.5 * params.wavelength / params.slit_separation;
  const double sin_zero = params.wavelength / (2.0 * params.slit_separation);

  double i_max = 0.0;
  bool window_hit = false;
  for (int k = 0; k < geom.n_pixels; ++k) {
    if (std::abs(std::sin(geom.pixel_theta_center(k))) <= sin_window) {
      i_max = window_hit ? std::max(i_max, sim_normalized[static_cast<std::size_t>(k)])
                         : sim_normalized[static_cast<std::size_t>(k)];
      window_hit = true;
    }
  }
  if (!window_hit) throw ConfigError("fringe_visibility: analysis window contains no pixels");

  double i_min = i_max;
  for (const double target : {sin_zero, -sin_zero}) {
    int nearest = 0;
    double best = std::abs(std::sin(geom.pixel_theta_center(0)) - target);
    for (int k = 1; k < geom.n_pixels; ++k) {
      const double dist = std::abs(std::sin(geom.pixel_theta_center(k)) - target);
      if (dist < best) {
        best = dist;
        nearest = k;
      }
    }
    const int lo = std::max(0, nearest - 3);
    const int hi = std::min(geom.n_pixels - 1, nearest + 3);
    for (int k = lo; k <= hi; ++k) {
      i_min = std::min(i_min, sim_normalized[static_cast<std::size_t>(k)]);
    }
  }

  const double denom = i_max + i_min;
  if (denom <= 0.0) return 0.0;
  return std::clamp((i_max - i_min) / denom, 0.0, 1.0);
}

ComparisonReport compare_to_references(std::span<const std::uint64_t> clicks,
                                       const Geometry& geom) {
  const std::vector<double> sim = normalize_peak(clicks);
  const SlitParams params = slit_params(geom);

  ComparisonReport report;
  report.n_pixels_used = geom.n_pixels;
  report.rms_vs_two_slit = rms_error(
      sim, [&](double theta) { return two_slit_intensity(theta, params); }, geom);
  report.rms_vs_switched = rms_error(
      sim, [&](double theta) { return switched_slits_prediction(theta, params); }, geom);
  report.visibility = fringe_visibility(sim, geom, params);

  const std::vector<double> ref = sample_normalized(
      [&](double theta) { return two_slit_intensity(theta, params); }, geom);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < sim.size(); ++i) {
    num += sim[i] * ref[i];
    den += ref[i] * ref[i];
  }
  report.fitted_amplitude = den > 0.0 ? num / den : 0.0;
  return report;
}

}  // namespace ebcm
