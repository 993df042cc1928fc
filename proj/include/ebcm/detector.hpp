#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "ebcm/vec2.hpp"

namespace ebcm {

// Unit phase vector of a photon after travelling path_length: angle
// 2*pi*path_length/lambda. The path is reduced modulo lambda before the trig
// call (fmod is exact in IEEE arithmetic), so the phase error stays bounded
// for arbitrarily long paths instead of growing with path_length/lambda.
inline Vec2 message_phase(double path_length, double lambda) {
  if (lambda <= 0.0) throw std::domain_error("message_phase: lambda must be > 0");
  const double frac = std::fmod(path_length, lambda) / lambda;
  const double phi = 2.0 * std::numbers::pi * frac;
  return {std::cos(phi), std::sin(phi)};
}

// Detector memory update: the new state is a convex combination of the old
// state and the incoming phase vector, weight gamma on the old state.
constexpr Vec2 update_pixel(Vec2 p, Vec2 e, double gamma) {
  return {gamma * p.x + (1.0 - gamma) * e.x, gamma * p.y + (1.0 - gamma) * e.y};
}

// State of one detector element. Starting from p = 0 every memory vector is a
// convex combination of unit vectors, so |p| <= 1 holds at all times.
struct PixelState {
  Vec2 p{};
  std::uint64_t clicks = 0;
  std::uint64_t arrivals = 0;
};

// Absorbs one photon: updates the memory vector and fires a click when its
// length reaches the threshold. A click resets the memory to zero, making the
// inter-click process memoryless. The comparison is done on squared lengths.
inline bool register_arrival(PixelState& pixel, Vec2 e, double gamma, double threshold) {
  ++pixel.arrivals;
  pixel.p = update_pixel(pixel.p, e, gamma);
  if (pixel.p.norm_sq() >= threshold * threshold) {
    ++pixel.clicks;
    pixel.p = Vec2{};
    return true;
  }
  return false;
}

// Arrivals needed for the first click under a constant phase stream,
// solving 1 - gamma^i >= threshold.
inline std::uint64_t arrivals_to_first_click(double gamma, double threshold) {
  return static_cast<std::uint64_t>(std::ceil(std::log1p(-threshold) / std::log(gamma)));
}

}  // namespace ebcm
