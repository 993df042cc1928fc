#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ebcm/runner.hpp"
#include "ebcm/stats.hpp"

namespace ebcm {

// CSV serialization of a results table. One row per pixel under the header
//   pixel_index,theta_deg,arrivals,clicks,normalized_clicks,analytic_two_slit,analytic_switched
// Reals use %.17g (value-exact round trip), lines end with LF, and the file
// is newline-terminated. Identical (config, seed) produces identical bytes.
std::string csv_string(const ResultsTable& table);
void write_csv(const ResultsTable& table, const std::string& path);

// Pixel columns read back from a results CSV.
struct CsvTable {
  std::vector<int> pixel_index;
  std::vector<double> theta_deg;
  std::vector<std::uint64_t> arrivals;
  std::vector<std::uint64_t> clicks;
  std::vector<double> normalized_clicks;
  std::vector<double> analytic_two_slit;
  std::vector<double> analytic_switched;
};
CsvTable read_csv(const std::string& path);

// JSON manifest pairing a run with the exact config that produced it: config
// echo (reload-able via parse_config), tool version, RNG identity, start
// timestamp, output paths, run bookkeeping and the comparison report (null
// for an empty run). Everything except `created`, `wall_seconds` and
// `events_per_second` is deterministic.
std::string manifest_string(const ResultsTable& table,
                            const std::optional<ComparisonReport>& report,
                            const std::vector<std::string>& output_paths,
                            const std::string& created_utc);
void write_manifest(const ResultsTable& table,
                    const std::optional<ComparisonReport>& report,
                    const std::vector<std::string>& output_paths, const std::string& path);

// Current UTC time as an ISO 8601 string.
std::string utc_timestamp();

}  // namespace ebcm
