#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>

#include "ebcm/vec2.hpp"

namespace ebcm {

inline constexpr double kHalfPi = std::numbers::pi / 2.0;

enum class Slit : std::uint8_t { S1, S2 };

// Two-slit setup with a circular detector arc. All lengths are stored in
// units of the wavelength; config loading converts physical units once, so
// wavelength is 1.0 for any file-loaded geometry. The detector circle is
// centred on the midpoint between the slit centres, which sit at
// x = -separation/2 (S1) and x = +separation/2 (S2) on the source line y = 0.
struct Geometry {
  double slit_separation = 5.0;                // d  [lambda]
  double slit_width = 1.0;                     // a  [lambda]
  double wavelength = 1.0;                     // lambda  [lambda]
  double detector_radius = 50000.0 / 670.0;    // X  [lambda]
  int n_pixels = 181;
  double theta_min = -kHalfPi;                 // arc extent  [rad]
  double theta_max = kHalfPi;

  double pixel_width() const { return (theta_max - theta_min) / n_pixels; }

  // Centre angle of pixel k; bins are [theta_min + k*w, theta_min + (k+1)*w).
  double pixel_theta_center(int k) const {
    return theta_min + (static_cast<double>(k) + 0.5) * pixel_width();
  }

  double slit_center_x(Slit s) const {
    return s == Slit::S1 ? -slit_separation / 2.0 : slit_separation / 2.0;
  }

  bool operator==(const Geometry&) const = default;
};

// Lengths as given in the config file, kept in nanometres so that manifests
// echo exactly what was parsed (the nm -> lambda conversion is deterministic,
// which makes re-running a manifest byte-exact).
struct PhysicalLengths {
  double slit_separation_nm = 3350.0;
  double slit_width_nm = 670.0;
  double wavelength_nm = 670.0;
  double detector_radius_nm = 50000.0;

  bool operator==(const PhysicalLengths&) const = default;
};

// One simulated photon. The emission point and travel direction are fixed at
// the source; path_length and phase are resolved when the ray is traced to
// the detector.
struct PhotonMessage {
  Slit slit = Slit::S1;
  Vec2 emission_point{};      // on the source line y = 0  [lambda]
  double direction = 0.0;     // measured from the slit-plane normal  [rad]
  double path_length = 0.0;   // emission point to detector intersection  [lambda]
  Vec2 phase{1.0, 0.0};
};

struct PixelHit {
  int pixel_index = 0;
  double path_length = 0.0;   // [lambda]
};

// Intersects the photon's ray with the detector circle and bins the hit by
// angle. Returns nullopt when the hit lies outside the arc extent (possible
// for arcs narrower than the forward half-plane, because off-centre emission
// shifts the hit angle relative to the travel direction).
inline std::optional<PixelHit> trace_to_pixel(const PhotonMessage& msg,
                                              const Geometry& geom) {
  const double x0 = msg.emission_point.x;
  const double s = std::sin(msg.direction);
  const double c = std::cos(msg.direction);
  // |p0 + t*(s, c)| = X  with |x0| < X, so the positive root always exists.
  const double radius_sq = geom.detector_radius * geom.detector_radius;
  const double t = -x0 * s + std::sqrt(x0 * x0 * (s * s - 1.0) + radius_sq);
  const double hit_x = x0 + t * s;
  const double hit_y = t * c;
  const double theta = std::atan2(hit_x, hit_y);  // from the +y normal
  const int k = static_cast<int>(std::floor((theta - geom.theta_min) / geom.pixel_width()));
  if (k < 0 || k >= geom.n_pixels) return std::nullopt;
  return PixelHit{k, t};
}

}  // namespace ebcm
