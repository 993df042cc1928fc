#include "ebcm/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "ebcm/errors.hpp"

namespace ebcm {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_double(std::string_view value, std::string_view key) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError("key '" + std::string(key) + "': malformed number '" +
                      std::string(value) + "'");
  }
  return out;
}

std::uint64_t parse_u64(std::string_view value, std::string_view key) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError("key '" + std::string(key) + "': malformed integer '" +
                      std::string(value) + "'");
  }
  return out;
}

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Key-value store with required/optional lookup and duplicate detection.
class KvDocument {
 public:
  explicit KvDocument(std::string_view text) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t eol = std::min(text.find('\n', pos), text.size());
      std::string_view line = trim(text.substr(pos, eol - pos));
      pos = eol + 1;
      if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
        line = trim(line.substr(0, hash));
      }
      if (line.empty()) continue;
      const std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw ConfigError("malformed config line (expected key=value): '" +
                          std::string(line) + "'");
      }
      const std::string key{trim(line.substr(0, eq))};
      const std::string value{trim(line.substr(eq + 1))};
      if (key.empty()) throw ConfigError("empty key in config line");
      if (!entries_.emplace(key, value).second) {
        throw ConfigError("duplicate key '" + key + "'");
      }
    }
  }

  std::string require(const std::string& key) {
    const auto it = entries_.find(key);
    if (it == entries_.end()) throw ConfigError("missing key '" + key + "'");
    used_.insert(key);
    return it->second;
  }

  std::string optional(const std::string& key, const std::string& fallback) {
    const auto it = entries_.find(key);
    used_.insert(key);
    return it == entries_.end() ? fallback : it->second;
  }

  bool has(const std::string& key) const { return entries_.contains(key); }

  void reject_unknown() const {
    for (const auto& [key, value] : entries_) {
      if (!used_.contains(key)) throw ConfigError("unknown key '" + key + "'");
    }
  }

 private:
  std::map<std::string, std::string> entries_;
  std::set<std::string> used_;
};

}  // namespace

double parse_length_nm(std::string_view value, std::string_view key) {
  value = trim(value);
  double factor = 0.0;
  std::string_view number = value;
  if (value.ends_with("nm")) {
    factor = 1.0;
  } else if (value.ends_with("um")) {
    factor = 1e3;
  } else if (value.ends_with("mm")) {
    factor = 1e6;
  } else {
    throw ConfigError("key '" + std::string(key) +
                      "': length needs a unit suffix (nm, um or mm), got '" +
                      std::string(value) + "'");
  }
  number = trim(number.substr(0, number.size() - 2));
  const double parsed = parse_double(number, key);
  if (parsed <= 0.0) {
    throw ConfigError("key '" + std::string(key) + "': length must be > 0");
  }
  return parsed * factor;
}

double parse_angle_rad(std::string_view value, std::string_view key) {
  value = trim(value);
  if (value.ends_with("deg")) {
    return parse_double(trim(value.substr(0, value.size() - 3)), key) *
           std::numbers::pi / 180.0;
  }
  if (value.ends_with("rad")) {
    return parse_double(trim(value.substr(0, value.size() - 3)), key);
  }
  return parse_double(value, key);
}

ExperimentConfig parse_config(std::string_view text) {
  KvDocument doc(text);
  ExperimentConfig config;

  PhysicalLengths phys;
  phys.slit_separation_nm = parse_length_nm(doc.require("d"), "d");
  phys.slit_width_nm = parse_length_nm(doc.require("a"), "a");
  phys.wavelength_nm = parse_length_nm(doc.require("lambda"), "lambda");
  phys.detector_radius_nm = parse_length_nm(doc.require("X"), "X");
  config.physical = phys;

  config.geometry.slit_separation = phys.slit_separation_nm / phys.wavelength_nm;
  config.geometry.slit_width = phys.slit_width_nm / phys.wavelength_nm;
  config.geometry.wavelength = 1.0;
  config.geometry.detector_radius = phys.detector_radius_nm / phys.wavelength_nm;
  config.geometry.n_pixels =
      static_cast<int>(parse_u64(doc.optional("n_pixels", "181"), "n_pixels"));
  if (doc.has("theta_min")) {
    config.geometry.theta_min = parse_angle_rad(doc.require("theta_min"), "theta_min");
  }
  if (doc.has("theta_max")) {
    config.geometry.theta_max = parse_angle_rad(doc.require("theta_max"), "theta_max");
  }

  const std::string mode = doc.require("mode");
  if (mode == "random") {
    config.mode = SourceMode::random();
    if (doc.has("N")) throw ConfigError("key 'N' is only valid with mode=alternating");
  } else if (mode == "alternating") {
    config.mode = SourceMode::alternating(parse_u64(doc.require("N"), "N"));
  } else {
    throw ConfigError("key 'mode': expected 'random' or 'alternating', got '" + mode + "'");
  }

  config.photons = parse_u64(doc.require("M"), "M");
  config.gamma = parse_double(doc.require("gamma"), "gamma");
  config.threshold = parse_double(doc.optional("threshold", "0.25"), "threshold");
  config.seed = parse_u64(doc.optional("seed", "1"), "seed");
  config.replicas =
      static_cast<std::uint32_t>(parse_u64(doc.optional("replicas", "1"), "replicas"));

  doc.reject_unknown();
  try {
    validate(config);
  } catch (const ConfigError& err) {
    throw ConfigError(std::string("config rejected: ") + err.what());
  }
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string config_echo(const ExperimentConfig& config) {
  std::ostringstream out;
  out << "d=" << format_g17(config.physical.slit_separation_nm) << "nm\n";
  out << "a=" << format_g17(config.physical.slit_width_nm) << "nm\n";
  out << "lambda=" << format_g17(config.physical.wavelength_nm) << "nm\n";
  out << "X=" << format_g17(config.physical.detector_radius_nm) << "nm\n";
  out << "n_pixels=" << config.geometry.n_pixels << "\n";
  out << "theta_min=" << format_g17(config.geometry.theta_min) << "rad\n";
  out << "theta_max=" << format_g17(config.geometry.theta_max) << "rad\n";
  if (config.mode.kind == SourceMode::Kind::AlternatingBlocks) {
    out << "mode=alternating\n";
    out << "N=" << config.mode.block_size << "\n";
  } else {
    out << "mode=random\n";
  }
  out << "M=" << config.photons << "\n";
  out << "gamma=" << format_g17(config.gamma) << "\n";
  out << "threshold=" << format_g17(config.threshold) << "\n";
  out << "seed=" << config.seed << "\n";
  out << "replicas=" << config.replicas << "\n";
  return out.str();
}

}  // namespace ebcm
