#pragma once

#include <cmath>

namespace ebcm {

// Plain 2D vector. Carries both photon phase vectors (unit length) and
// detector memory vectors (length <= 1).
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr bool operator==(const Vec2&) const = default;

  constexpr double norm_sq() const { return x * x + y * y; }
  double norm() const { return std::sqrt(norm_sq()); }
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

}  // namespace ebcm
