#pragma once

#include "ebcm/geometry.hpp"

namespace ebcm {

// Parameters of the Fraunhofer reference curves.
struct SlitParams {
  double slit_width = 1.0;       // a  [lambda]
  double slit_separation = 5.0;  // d  [lambda]
  double wavelength = 1.0;       // [lambda]
  double amplitude = 1.0;        // overall scale A
};

SlitParams slit_params(const Geometry& geom, double amplitude = 1.0);

// sin(x)/x with the limit value at x = 0.
double sinc(double x);

// Two-slit Fraunhofer intensity at observation angle theta:
// A * sinc^2(a*pi*sin(theta)/lambda) * cos^2(pi*d*sin(theta)/lambda).
double two_slit_intensity(double theta, const SlitParams& params);

// Single-slit Fraunhofer envelope, A * sinc^2(a*pi*sin(theta)/lambda).
double single_slit_intensity(double theta, double slit_width, double wavelength,
                             double amplitude);

// Incoherent sum of the two single-slit patterns; with identical apertures
// this is twice the envelope in the far-field approximation.
double switched_slits_prediction(double theta, const SlitParams& params);

}  // namespace ebcm
