#include "ebcm/results_io.hpp"

#include <charconv>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "ebcm/config.hpp"
#include "ebcm/errors.hpp"
#include "ebcm/version.hpp"

namespace ebcm {

namespace {

void append_g17(std::string& out, double v) {
  char buf[64];
  const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
  out.append(buf, static_cast<std::size_t>(len));
}

void write_text_file(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace

std::string csv_string(const ResultsTable& table) {
  std::string out =
      "pixel_index,theta_deg,arrivals,clicks,normalized_clicks,"
      "analytic_two_slit,analytic_switched\n";
  const std::size_t n = table.theta_center.size();
  for (std::size_t k = 0; k < n; ++k) {
    out += std::to_string(k);
    out += ',';
    append_g17(out, table.theta_center[k] * 180.0 / std::numbers::pi);
    out += ',';
    out += std::to_string(table.arrivals[k]);
    out += ',';
    out += std::to_string(table.clicks[k]);
    out += ',';
    append_g17(out, table.normalized_clicks[k]);
    out += ',';
    append_g17(out, table.analytic_two_slit[k]);
    out += ',';
    append_g17(out, table.analytic_switched[k]);
    out += '\n';
  }
  return out;
}

void write_csv(const ResultsTable& table, const std::string& path) {
  write_text_file(csv_string(table), path);
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open CSV file '" + path + "'");

  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty CSV file '" + path + "'");

  const auto parse_field = [&](std::string_view field, auto& out) {
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
      throw IoError("malformed CSV field '" + std::string(field) + "' in '" + path + "'");
    }
  };

  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::string_view rest = line;
    std::string_view fields[7];
    for (int i = 0; i < 7; ++i) {
      const std::size_t comma = rest.find(',');
      if (i < 6 && comma == std::string_view::npos) {
        throw IoError("CSV row with fewer than 7 fields in '" + path + "'");
      }
      fields[i] = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    int pixel = 0;
    double theta = 0.0, norm = 0.0, two = 0.0, switched = 0.0;
    std::uint64_t arrivals = 0, clicks = 0;
    parse_field(fields[0], pixel);
    parse_field(fields[1], theta);
    parse_field(fields[2], arrivals);
    parse_field(fields[3], clicks);
    parse_field(fields[4], norm);
    parse_field(fields[5], two);
    parse_field(fields[6], switched);
    table.pixel_index.push_back(pixel);
    table.theta_deg.push_back(theta);
    table.arrivals.push_back(arrivals);
    table.clicks.push_back(clicks);
    table.normalized_clicks.push_back(norm);
    table.analytic_two_slit.push_back(two);
    table.analytic_switched.push_back(switched);
  }
  if (table.pixel_index.empty()) throw IoError("CSV '" + path + "' has no data rows");
  return table;
}

std::string manifest_string(const ResultsTable& table,
                            const std::optional<ComparisonReport>& report,
                            const std::vector<std::string>& output_paths,
                            const std::string& created_utc) {
  const ExperimentConfig& config = table.config;
  nlohmann::ordered_json j;
  j["tool"] = std::string(kToolName);
  j["version"] = std::string(kToolVersion);
  j["rng"] = std::string(kRngId);
  j["created"] = created_utc;

  nlohmann::ordered_json jc;
  jc["d_nm"] = config.physical.slit_separation_nm;
  jc["a_nm"] = config.physical.slit_width_nm;
  jc["lambda_nm"] = config.physical.wavelength_nm;
  jc["X_nm"] = config.physical.detector_radius_nm;
  jc["n_pixels"] = config.geometry.n_pixels;
  jc["theta_min_rad"] = config.geometry.theta_min;
  jc["theta_max_rad"] = config.geometry.theta_max;
  jc["mode"] = config.mode.kind == SourceMode::Kind::AlternatingBlocks
                   ? "alternating"
                   : "random";
  if (config.mode.kind == SourceMode::Kind::AlternatingBlocks) {
    jc["N"] = config.mode.block_size;
  }
  jc["M"] = config.photons;
  jc["gamma"] = config.gamma;
  jc["threshold"] = config.threshold;
  jc["seed"] = config.seed;
  jc["replicas"] = config.replicas;
  j["config"] = jc;
  j["config_echo"] = config_echo(config);
  j["outputs"] = output_paths;

  nlohmann::ordered_json jr;
  jr["discarded"] = table.discarded;
  jr["emitted_s1"] = table.emitted_s1;
  jr["emitted_s2"] = table.emitted_s2;
  jr["total_arrivals"] = table.total_arrivals();
  jr["total_clicks"] = table.total_clicks();
  jr["empty_run"] = table.empty_run;
  jr["wall_seconds"] = table.wall_seconds;
  jr["events_per_second"] = table.events_per_second;
  j["run"] = jr;

  if (report) {
    nlohmann::ordered_json jcmp;
    jcmp["rms_vs_two_slit"] = report->rms_vs_two_slit;
    jcmp["rms_vs_switched"] = report->rms_vs_switched;
    jcmp["visibility"] = report->visibility;
    jcmp["fitted_amplitude"] = report->fitted_amplitude;
    jcmp["n_pixels_used"] = report->n_pixels_used;
    j["comparison"] = jcmp;
  } else {
    j["comparison"] = nullptr;
  }
  return j.dump(2) + "\n";
}

void write_manifest(const ResultsTable& table,
                    const std::optional<ComparisonReport>& report,
                    const std::vector<std::string>& output_paths, const std::string& path) {
  write_text_file(manifest_string(table, report, output_paths, utc_timestamp()), path);
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace ebcm
