#pragma once

#include <string>
#include <string_view>

#include "ebcm/runner.hpp"

namespace ebcm {

// Reads a flat key=value config file ('#' comments, blank lines allowed) and
// returns a validated config with all lengths converted to wavelength units.
//
// Keys: d, a, lambda, X (lengths, suffix nm/um/mm required), mode
// (random|alternating), N (required for alternating), M, gamma, threshold,
// seed, replicas, n_pixels, theta_min, theta_max (suffix deg or rad, bare
// values are radians). Required: d, a, lambda, X, M, gamma, mode.
ExperimentConfig load_config(const std::string& path);

// Same parser on in-memory text.
ExperimentConfig parse_config(std::string_view text);

// Canonical key=value echo of a config; load-able by parse_config and equal
// to the original, bit for bit, because lengths are echoed as the parsed
// nanometre values.
std::string config_echo(const ExperimentConfig& config);

// "3350nm" / "0.67um" / "0.05mm" -> nanometres. Throws ConfigError when the
// suffix is missing or the number is malformed; `key` names the field in the
// error message.
double parse_length_nm(std::string_view value, std::string_view key);

// "90deg" / "1.5707rad" / bare radians -> radians.
double parse_angle_rad(std::string_view value, std::string_view key);

}  // namespace ebcm
