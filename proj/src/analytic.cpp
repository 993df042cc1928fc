#include "ebcm/analytic.hpp"

#include <cmath>
#include <numbers>

namespace ebcm {

SlitParams slit_params(const Geometry& geom, double amplitude) {
  return {geom.slit_width, geom.slit_separation, geom.wavelength, amplitude};
}

double sinc(double x) {
  if (x == 0.0) return 1.0;
  return std::sin(x) / x;
}

double single_slit_intensity(double theta, double slit_width, double wavelength,
                             double amplitude) {
  const double u = slit_width * std::numbers::pi * std::sin(theta) / wavelength;
  const double envelope = sinc(u);
  return amplitude * envelope * envelope;
}

double two_slit_intensity(double theta, const SlitParams& params) {
  const double envelope =
      single_slit_intensity(theta, params.slit_width, params.wavelength, params.amplitude);
  const double v =
      std::numbers::pi * params.slit_separation * std::sin(theta) / params.wavelength;
  const double fringe = std::cos(v);
  return envelope * fringe * fringe;
}

double switched_slits_prediction(double theta, const SlitParams& params) {
  return 2.0 * single_slit_intensity(theta, params.slit_width, params.wavelength,
                                     params.amplitude);
}

}  // namespace ebcm
