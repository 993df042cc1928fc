#include <cmath>
#include <numbers>

#include <doctest.h>

#include "ebcm/analytic.hpp"
#include "ebcm/rng.hpp"
#include "oracles.hpp"

using ebcm::SlitParams;

namespace {
const SlitParams kDefault{1.0, 5.0, 1.0, 1.0};
}

TEST_CASE("central values") {
  CHECK(ebcm::two_slit_intensity(0.0, kDefault) == 1.0);
  CHECK(ebcm::single_slit_intensity(0.0, 1.0, 1.0, 3.5) == 3.5);
  CHECK(ebcm::switched_slits_prediction(0.0, kDefault) == 2.0);
}

TEST_CASE("first interference zero at sin(theta) = lambda/(2d)") {
  const double theta = std::asin(0.1);
  CHECK(ebcm::two_slit_intensity(theta, kDefault) < 1e-12);
  // the switched prediction has no zero there
  CHECK(ebcm::switched_slits_prediction(theta, kDefault) > 0.9);
}

TEST_CASE("envelope zero at sin(theta) = lambda/a") {
  CHECK(ebcm::single_slit_intensity(ebcm::kHalfPi, 1.0, 1.0, 1.0) < 1e-12);
  CHECK(ebcm::two_slit_intensity(ebcm::kHalfPi, kDefault) < 1e-12);
}

TEST_CASE("envelope value at sin(theta) = 1/2 for a = lambda") {
  const double theta = std::asin(0.5);
  const double expected = 0.40528473456935108578;  // (2/pi)^2
  CHECK(ebcm::single_slit_intensity(theta, 1.0, 1.0, 1.0) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(ebcm::single_slit_intensity(theta, 1.0, 1.0, 2.5) ==
        doctest::Approx(2.5 * expected).epsilon(1e-12));
}

TEST_CASE("two-slit curve factorizes into envelope times fringe term") {
  ebcm::Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const double theta = rng.uniform(-ebcm::kHalfPi, ebcm::kHalfPi);
    const double lhs = ebcm::two_slit_intensity(theta, kDefault);
    const double cosv = std::cos(std::numbers::pi * kDefault.slit_separation *
                                 std::sin(theta) / kDefault.wavelength);
    const double rhs = ebcm::single_slit_intensity(theta, kDefault.slit_width,
                                                   kDefault.wavelength,
                                                   kDefault.amplitude) *
                       cosv * cosv;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    CHECK(lhs == doctest::Approx(oracle::two_slit(theta, 1.0, 5.0, 1.0, 1.0))
                     .epsilon(1e-12));
  }
}

TEST_CASE("intensities are even and non-negative") {
  ebcm::Rng rng(12);
  for (int i = 0; i < 500; ++i) {
    const double theta = rng.uniform(0.0, ebcm::kHalfPi);
    CHECK(ebcm::two_slit_intensity(theta, kDefault) ==
          ebcm::two_slit_intensity(-theta, kDefault));
    CHECK(ebcm::single_slit_intensity(theta, 1.0, 1.0, 1.0) ==
          ebcm::single_slit_intensity(-theta, 1.0, 1.0, 1.0));
    CHECK(ebcm::switched_slits_prediction(theta, kDefault) ==
          ebcm::switched_slits_prediction(-theta, kDefault));
    CHECK(ebcm::two_slit_intensity(theta, kDefault) >= 0.0);
  }
}

TEST_CASE("no 0/0 blowup near the sinc root") {
  CHECK(std::isfinite(ebcm::two_slit_intensity(1e-300, kDefault)));
  CHECK(ebcm::two_slit_intensity(1e-300, kDefault) == doctest::Approx(1.0));
  CHECK(ebcm::sinc(0.0) == 1.0);
  CHECK(ebcm::sinc(1e-300) == 1.0);
}

TEST_CASE("switched prediction is twice the shared envelope") {
  ebcm::Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const double theta = rng.uniform(-ebcm::kHalfPi, ebcm::kHalfPi);
    CHECK(ebcm::switched_slits_prediction(theta, kDefault) ==
          2.0 * ebcm::single_slit_intensity(theta, kDefault.slit_width,
                                            kDefault.wavelength, kDefault.amplitude));
  }
}
