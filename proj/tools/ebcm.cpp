// Command-line front end: run one experiment, sweep block sizes and gammas,
// or recompute comparison statistics from a stored CSV.
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ebcm/config.hpp"
#include "ebcm/errors.hpp"
#include "ebcm/results_io.hpp"
#include "ebcm/runner.hpp"
#include "ebcm/stats.hpp"
#include "ebcm/version.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<double> gamma;
  std::optional<std::uint64_t> block_n;
  std::optional<std::uint64_t> photons;
  std::optional<double> threshold;
  std::optional<int> pixels;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool config_required) {
  auto* config = cmd->add_option("--config", opts.config_path, "config file (key=value)");
  if (config_required) config->required();
  cmd->add_option("--out", opts.out_dir, "output directory");
  cmd->add_option("--seed", opts.seed, "override master seed");
  cmd->add_option("--gamma", opts.gamma, "override detector memory gamma");
  cmd->add_option("--block-n", opts.block_n, "override block size N (switches mode to alternating)");
  cmd->add_option("--photons", opts.photons, "override photon count M");
  cmd->add_option("--threshold", opts.threshold, "override click threshold T");
  cmd->add_option("--pixels", opts.pixels, "override detector pixel count");
}

ebcm::ExperimentConfig load_with_overrides(const CommonOpts& opts) {
  ebcm::ExperimentConfig config = ebcm::load_config(opts.config_path);
  if (opts.seed) config.seed = *opts.seed;
  if (opts.gamma) config.gamma = *opts.gamma;
  if (opts.block_n) config.mode = ebcm::SourceMode::alternating(*opts.block_n);
  if (opts.photons) config.photons = *opts.photons;
  if (opts.threshold) config.threshold = *opts.threshold;
  if (opts.pixels) config.geometry.n_pixels = *opts.pixels;
  ebcm::validate(config);
  return config;
}

std::string join(const std::filesystem::path& dir, const std::string& name) {
  return (dir / name).string();
}

std::optional<ebcm::ComparisonReport> compare_if_nonempty(const ebcm::ResultsTable& table) {
  if (table.empty_run) return std::nullopt;
  return ebcm::compare_to_references(table.clicks, table.config.geometry);
}

std::string format_gamma(double gamma) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", gamma);
  return buf;
}

int cmd_run(const CommonOpts& opts) {
  const ebcm::ExperimentConfig config = load_with_overrides(opts);
  std::filesystem::create_directories(opts.out_dir);

  const ebcm::ResultsTable table = ebcm::run_experiment(config);
  const auto report = compare_if_nonempty(table);

  const std::string csv_path = join(opts.out_dir, "run.csv");
  const std::string json_path = join(opts.out_dir, "run.json");
  ebcm::write_csv(table, csv_path);
  ebcm::write_manifest(table, report, {csv_path}, json_path);

  std::cout << "wrote " << csv_path << " and " << json_path << "\n";
  std::cout << "clicks=" << table.total_clicks() << " discarded=" << table.discarded
            << " events/s=" << static_cast<std::uint64_t>(table.events_per_second) << "\n";
  if (report) {
    std::cout << "rms_vs_two_slit=" << report->rms_vs_two_slit
              << " rms_vs_switched=" << report->rms_vs_switched
              << " visibility=" << report->visibility << "\n";
  } else {
    std::cout << "empty run: no pixel clicked\n";
  }
  return 0;
}

int cmd_sweep(const CommonOpts& opts, const std::vector<std::uint64_t>& n_values,
              const std::vector<double>& gamma_values) {
  const ebcm::ExperimentConfig base = load_with_overrides(opts);
  std::filesystem::create_directories(opts.out_dir);

  const auto points = ebcm::run_sweep(base, n_values, gamma_values);

  nlohmann::ordered_json summary;
  summary["tool"] = std::string(ebcm::kToolName);
  summary["version"] = std::string(ebcm::kToolVersion);
  summary["created"] = ebcm::utc_timestamp();
  summary["base_seed"] = base.seed;
  summary["replicas"] = base.replicas;
  summary["points"] = nlohmann::ordered_json::array();

  bool any_failed = false;
  for (const auto& point : points) {
    nlohmann::ordered_json jp;
    jp["N"] = point.block_size;
    jp["gamma"] = point.gamma;
    jp["seed"] = point.seed;
    if (!point.error.empty()) {
      jp["error"] = point.error;
      any_failed = true;
      std::cerr << "sweep point skipped: " << point.error << "\n";
      summary["points"].push_back(jp);
      continue;
    }
    std::vector<std::string> files;
    std::vector<double> visibilities;
    for (std::size_t r = 0; r < point.tables.size(); ++r) {
      const ebcm::ResultsTable& table = point.tables[r];
      const std::string stem = "sweep_N" + std::to_string(point.block_size) + "_g" +
                               format_gamma(point.gamma) + "_r" + std::to_string(r);
      const std::string csv_path = join(opts.out_dir, stem + ".csv");
      const std::string json_path = join(opts.out_dir, stem + ".json");
      const auto report = compare_if_nonempty(table);
      ebcm::write_csv(table, csv_path);
      ebcm::write_manifest(table, report, {csv_path}, json_path);
      files.push_back(csv_path);
      if (report) visibilities.push_back(report->visibility);
    }
    jp["files"] = files;
    if (!visibilities.empty()) {
      std::sort(visibilities.begin(), visibilities.end());
      jp["median_visibility"] = visibilities[visibilities.size() / 2];
    }
    summary["points"].push_back(jp);
  }

  const std::string summary_path = join(opts.out_dir, "sweep.json");
  std::ofstream out(summary_path, std::ios::binary);
  if (!out) throw ebcm::IoError("cannot open '" + summary_path + "' for writing");
  out << summary.dump(2) << "\n";
  std::cout << "wrote " << points.size() << " sweep point(s) to " << opts.out_dir << "\n";
  return any_failed ? 1 : 0;
}

int cmd_compare(const CommonOpts& opts, const std::string& csv_path) {
  const ebcm::ExperimentConfig config = load_with_overrides(opts);
  const ebcm::CsvTable csv = ebcm::read_csv(csv_path);
  if (static_cast<int>(csv.clicks.size()) != config.geometry.n_pixels) {
    throw ebcm::ConfigError("CSV has " + std::to_string(csv.clicks.size()) +
                            " pixel rows but the config declares " +
                            std::to_string(config.geometry.n_pixels));
  }
  const ebcm::ComparisonReport report =
      ebcm::compare_to_references(csv.clicks, config.geometry);

  nlohmann::ordered_json j;
  j["source_csv"] = csv_path;
  j["rms_vs_two_slit"] = report.rms_vs_two_slit;
  j["rms_vs_switched"] = report.rms_vs_switched;
  j["visibility"] = report.visibility;
  j["fitted_amplitude"] = report.fitted_amplitude;
  j["n_pixels_used"] = report.n_pixels_used;
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Event-based two-slit interference simulator"};
  app.set_version_flag("--version", std::string(ebcm::kToolVersion));
  app.require_subcommand(1);

  CommonOpts run_opts;
  auto* run = app.add_subcommand("run", "run one experiment");
  add_common(run, run_opts, true);

  CommonOpts sweep_opts;
  std::vector<std::uint64_t> n_values;
  std::vector<double> gamma_values;
  auto* sweep = app.add_subcommand("sweep", "sweep block sizes and gammas");
  add_common(sweep, sweep_opts, true);
  sweep->add_option("--n-values", n_values, "block sizes N (comma separated)")
      ->required()
      ->delimiter(',');
  sweep->add_option("--gamma-values", gamma_values, "gamma values (comma separated)")
      ->required()
      ->delimiter(',');

  CommonOpts compare_opts;
  std::string compare_csv;
  auto* compare = app.add_subcommand("compare", "recompute statistics from a results CSV");
  add_common(compare, compare_opts, true);
  compare->add_option("csv", compare_csv, "results CSV produced by run or sweep")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (run->parsed()) return cmd_run(run_opts);
    if (sweep->parsed()) return cmd_sweep(sweep_opts, n_values, gamma_values);
    if (compare->parsed()) return cmd_compare(compare_opts, compare_csv);
  } catch (const ebcm::IoError& err) {
    std::cerr << "I/O error: " << err.what() << "\n";
    return 2;
  } catch (const ebcm::ConfigError& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return 1;
  } catch (const ebcm::EmptyRunError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
