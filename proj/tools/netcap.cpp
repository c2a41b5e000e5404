// Copyright 2026 netcap authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "netcap/errors.hpp"
#include "netcap/experiment.hpp"

namespace {

struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  int workers = 1;
};

void add_common(CLI::App* cmd, CommonOptions* opts) {
  cmd->add_option("--config", opts->config_path, "experiment config file")
      ->required();
  cmd->add_option("--seed", opts->seed, "override the config seed");
  cmd->add_option("--out", opts->out_path, "override the CSV output path");
  cmd->add_option("--workers", opts->workers, "worker threads")
      ->check(CLI::Range(1, 256));
}

netcap::ExperimentConfig load(const CommonOptions& opts) {
  netcap::ExperimentConfig config = netcap::load_config(opts.config_path);
  if (opts.seed) config.seed = *opts.seed;
  if (!opts.out_path.empty()) config.out_csv = opts.out_path;
  return config;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw netcap::ConfigError(0, "cannot open output file '" + path + "'");
  out << contents;
}

// Writes to the configured CSV path when set, otherwise to stdout.
void emit(const netcap::ExperimentConfig& config, const std::string& contents) {
  if (config.out_csv.empty()) {
    std::cout << contents;
  } else {
    write_file(config.out_csv, contents);
  }
}

int run_mode(netcap::ExperimentMode mode, const CommonOptions& opts) {
  using namespace netcap;
  const ExperimentConfig config = load(opts);

  switch (mode) {
    case ExperimentMode::kBounds: {
      const BoundsReport report = compute_bounds(config);
      write_bounds_text(report, std::cout);
      if (!config.out_csv.empty()) write_file(config.out_csv, bounds_csv(report));
      return kExitOk;
    }
    case ExperimentMode::kMiSweep: {
      const SweepResult result = run_mi_sweep(config, opts.workers);
      emit(config, sweep_csv(result));
      return result.bound_violation ? kExitBoundViolation : kExitOk;
    }
    case ExperimentMode::kVerify: {
      const VerifyReport report = run_verify(config, opts.workers);
      write_verify_report(report, std::cout);
      return report.all_pass() ? kExitOk : kExitVerifyFailure;
    }
    case ExperimentMode::kDistCheck: {
      const VerifyReport report = run_dist_check(config, opts.workers);
      write_verify_report(report, std::cout);
      return report.all_pass() ? kExitOk : kExitVerifyFailure;
    }
    case ExperimentMode::kSimulate: {
      emit(config, simulate_csv(config));
      return kExitOk;
    }
  }
  return kExitConfigError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"capacity bounds and mutual-information estimation for the "
               "noncoherent interference network"};
  app.require_subcommand(1);

  struct ModeSpec {
    const char* name;
    const char* help;
    netcap::ExperimentMode mode;
  };
  const ModeSpec modes[] = {
      {"bounds", "closed-form capacity bound table", netcap::ExperimentMode::kBounds},
      {"simulate", "dump raw channel samples as CSV", netcap::ExperimentMode::kSimulate},
      {"mi-sweep", "mutual-information sweep across SNR", netcap::ExperimentMode::kMiSweep},
      {"verify", "run the analytic property suites", netcap::ExperimentMode::kVerify},
      {"dist-check", "run the channel distribution checks", netcap::ExperimentMode::kDistCheck},
  };

  CommonOptions opts[std::size(modes)];
  for (std::size_t i = 0; i < std::size(modes); ++i) {
    CLI::App* cmd = app.add_subcommand(modes[i].name, modes[i].help);
    add_common(cmd, &opts[i]);
  }

  CLI11_PARSE(app, argc, argv);

  for (std::size_t i = 0; i < std::size(modes); ++i) {
    if (!app.get_subcommand(modes[i].name)->parsed()) continue;
    try {
      return run_mode(modes[i].mode, opts[i]);
    } catch (const netcap::ConfigError& e) {
      std::cerr << "config error: " << e.what() << "\n";
      return netcap::kExitConfigError;
    } catch (const netcap::ModelError& e) {
      std::cerr << "model error: " << e.what() << "\n";
      return netcap::kExitConfigError;
    } catch (const netcap::TruncationError& e) {
      std::cerr << "truncation error: " << e.what() << "\n";
      return netcap::kExitConfigError;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      const bool verifying = modes[i].mode == netcap::ExperimentMode::kVerify ||
                             modes[i].mode == netcap::ExperimentMode::kDistCheck;
      return verifying ? netcap::kExitVerifyFailure : netcap::kExitConfigError;
    }
  }
  return netcap::kExitConfigError;
}
