#pragma once

#include <cassert>
#include <cstdint>

#include "ebcm/geometry.hpp"
#include "ebcm/rng.hpp"

namespace ebcm {

// Source discipline: either every photon picks a slit by fair coin, or the
// sources take turns emitting blocks of N photons while the other is blocked.
struct SourceMode {
  enum class Kind : std::uint8_t { RandomPerPhoton, AlternatingBlocks };

  Kind kind = Kind::RandomPerPhoton;
  std::uint64_t block_size = 0;   // N, AlternatingBlocks only

  static SourceMode random() { return {Kind::RandomPerPhoton, 0}; }
  static SourceMode alternating(std::uint64_t n) { return {Kind::AlternatingBlocks, n}; }

  bool operator==(const SourceMode&) const = default;
};

// Serial emission counter. S1 emits the first block; block parity of
// emitted_total decides the active source thereafter.
struct SourceState {
  SourceMode mode;
  std::uint64_t emitted_total = 0;
  Slit current = Slit::S1;
};

// Picks the emitting slit for the next photon. The caller increments
// emitted_total after the emission is complete.
inline Slit next_slit(SourceState& state, Rng& rng) {
  if (state.mode.kind == SourceMode::Kind::RandomPerPhoton) {
    state.current = rng.coin() ? Slit::S2 : Slit::S1;
  } else {
    const std::uint64_t block = state.emitted_total / state.mode.block_size;
    state.current = (block % 2 == 0) ? Slit::S1 : Slit::S2;
  }
  return state.current;
}

// Draws an emission point uniformly across the slit aperture and a travel
// direction uniformly in angle over the detector arc extent. Draw order
// (point, then direction) is part of the reproducibility contract.
inline PhotonMessage sample_emission(Slit slit, const Geometry& geom, Rng& rng) {
  const double center = geom.slit_center_x(slit);
  const double x = center + (rng.next_unit() - 0.5) * geom.slit_width;
  const double direction = rng.uniform(geom.theta_min, geom.theta_max);
  assert(std::abs(x - center) <= geom.slit_width / 2.0);
  return PhotonMessage{slit, Vec2{x, 0.0}, direction, 0.0, Vec2{1.0, 0.0}};
}

}  // namespace ebcm
