#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ebcm/analytic.hpp"
#include "ebcm/geometry.hpp"

namespace ebcm {

// Figure-level agreement metrics for one run.
struct ComparisonReport {
  double rms_vs_two_slit = 0.0;
  double rms_vs_switched = 0.0;
  double visibility = 0.0;
  double fitted_amplitude = 0.0;   // least-squares scale, diagnostic only
  int n_pixels_used = 0;
};

// Divides by the maximum so the peak is exactly 1. Throws EmptyRunError on
// all-zero input.
std::vector<double> normalize_peak(std::span<const double> values);
std::vector<double> normalize_peak(std::span<const std::uint64_t> counts);

// Root-mean-square difference between an already peak-normalized simulated
// pattern and a reference intensity curve sampled at the pixel centres and
// peak-normalized the same way. The shared normalization cancels the
// reference amplitude.
double rms_error(std::span<const double> sim_normalized,
                 const std::function<double(double)>& reference, const Geometry& geom);

// Fringe visibility (I_max - I_min)/(I_max + I_min) over the central fringes:
// I_max over the window |sin(theta)| <= 1.5*lambda/d, I_min over the two
// neighbourhoods (+-3 pixels) of the predicted first zeros at
// sin(theta) = +-lambda/(2d). Using predicted-zero neighbourhoods instead of
// a global minimum keeps shot noise at dark pixels from leaving the [0,1]
// range. Returns 0 for a flat signal.
double fringe_visibility(std::span<const double> sim_normalized, const Geometry& geom,
                         const SlitParams& params);

// Full report for a click histogram: RMS against both references, fringe
// visibility, and the least-squares amplitude fit against the two-slit curve.
ComparisonReport compare_to_references(std::span<const std::uint64_t> clicks,
                                       const Geometry& geom);

}  // namespace ebcm
