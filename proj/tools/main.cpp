// ssvepkit command line: synthetic dataset generation, validation, pipeline
// runs, hyper-parameter grid search and method comparisons.
//
// Exit codes: 0 success, 2 config error, 3 IO error, 4 data validation
// error, 5 evaluation failure.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ssvepkit/config.hpp"
#include "ssvepkit/dataset.hpp"
#include "ssvepkit/error.hpp"
#include "ssvepkit/gridsearch.hpp"
#include "ssvepkit/pipeline.hpp"
#include "ssvepkit/report.hpp"

namespace fs = std::filesystem;
using namespace ssvep;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitData = 4;
constexpr int kExitEval = 5;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::invalid_config:
    case ErrorCode::non_positive_parameter:
    case ErrorCode::k_too_small:
    case ErrorCode::invalid_accuracy:
      return kExitConfig;
    case ErrorCode::missing_file:
    case ErrorCode::io_failure:
      return kExitIo;
    case ErrorCode::malformed_manifest:
    case ErrorCode::label_not_in_stimulus_set:
    case ErrorCode::channel_mismatch:
    case ErrorCode::unknown_channel:
    case ErrorCode::band_edges_above_nyquist:
    case ErrorCode::nyquist_violation:
    case ErrorCode::dataset_mismatch:
      return kExitData;
    default:
      return kExitEval;
  }
}

struct CommonOpts {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_dir;
  std::size_t jobs{1};
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_jobs = true) {
  cmd->add_option("--config", opts.config_path, "JSON config file")->required();
  cmd->add_option("--set", opts.overrides,
                  "Override a config value, e.g. --set train.lambda=0.5");
  cmd->add_option("--out", opts.out_dir, "Output directory (overrides config)");
  if (with_jobs) {
    cmd->add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  }
}

fs::path ensure_out_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw Error(ErrorCode::io_failure, "cannot create output directory " + dir);
  }
  return dir;
}

int cmd_simulate(const CommonOpts& opts) {
  SynthDatasetConfig cfg = load_synth_config(opts.config_path, opts.overrides);
  if (!opts.out_dir.empty()) cfg.output_dir = opts.out_dir;
  const Dataset ds = synthesize_dataset(cfg);
  const fs::path dir = ensure_out_dir(cfg.output_dir);
  save_dataset(ds, (dir / "manifest.json").string());
  std::cout << "wrote " << ds.manifest.trials.size() << " trials to " << dir.string()
            << "\n";
  return 0;
}

int cmd_validate(const CommonOpts& opts) {
  const ExperimentConfig cfg = load_experiment_config(opts.config_path, opts.overrides);
  const Dataset ds = load_dataset(cfg.dataset_path);
  // Surface bank construction problems (Nyquist, profile range) here too.
  if (cfg.method == Method::bifb || cfg.method == Method::uf) {
    const FilterBank bank = make_method_bank(cfg, ds.manifest.stimulus_frequencies_hz,
                                             ds.manifest.sampling_rate_hz);
    for (const auto& w :
         bank_overlap_warnings(bank, ds.manifest.stimulus_frequencies_hz)) {
      std::cerr << "warning: " << w << "\n";
    }
  }
  std::cout << "ok: dataset '" << ds.manifest.name << "' with "
            << ds.manifest.trials.size() << " trials, K="
            << ds.manifest.n_classes() << ", method " << method_name(cfg.method)
            << "\n";
  return 0;
}

int cmd_run(const CommonOpts& opts) {
  ExperimentConfig cfg = load_experiment_config(opts.config_path, opts.overrides);
  if (!opts.out_dir.empty()) cfg.output_dir = opts.out_dir;
  const Dataset ds = load_dataset(cfg.dataset_path);
  const auto outcomes = loo_cv(ds, cfg, opts.jobs);
  const EvalReport report = summarize(outcomes, ds.manifest.n_classes());

  const fs::path dir = ensure_out_dir(cfg.output_dir);
  const std::string text = render_report(report, ds.manifest.name);
  write_text(text, (dir / "report.txt").string());
  write_report_csv(report, (dir / "report.csv").string());
  write_outcomes_csv(outcomes, (dir / "outcomes.csv").string());
  std::cout << text;
  return 0;
}

int cmd_gridsearch(const CommonOpts& opts) {
  ExperimentConfig cfg = load_experiment_config(opts.config_path, opts.overrides);
  if (!opts.out_dir.empty()) cfg.output_dir = opts.out_dir;
  if (cfg.grid.axes.empty()) {
    throw Error(ErrorCode::invalid_config, "config has no grid.axes");
  }
  const Dataset ds = load_dataset(cfg.dataset_path);
  std::cerr << "grid size: " << cfg.grid.total_points() << " points\n";
  const GridResult grid = grid_search(ds, cfg, opts.jobs);

  const fs::path dir = ensure_out_dir(cfg.output_dir);
  write_grid_csv(grid, (dir / "grid.csv").string());

  const auto outcomes = loo_cv(ds, grid.best_config, opts.jobs);
  const EvalReport report = summarize(outcomes, ds.manifest.n_classes());
  write_text(render_report(report, ds.manifest.name), (dir / "report.txt").string());
  write_outcomes_csv(outcomes, (dir / "outcomes.csv").string());

  std::cout << "best point:";
  for (std::size_t a = 0; a < grid.keys.size(); ++a) {
    std::cout << ' ' << grid.keys[a] << '='
              << grid.table[grid.best_index].values[a];
  }
  std::cout << "\n" << render_report(report, ds.manifest.name);
  return 0;
}

int cmd_compare(const std::vector<std::string>& config_paths,
                const std::vector<std::string>& overrides, const std::string& out_dir,
                std::size_t jobs) {
  if (config_paths.size() < 2) {
    throw Error(ErrorCode::invalid_config, "compare needs at least two --config");
  }
  std::vector<ExperimentConfig> configs;
  for (const auto& p : config_paths) {
    configs.push_back(load_experiment_config(p, overrides));
  }
  for (const auto& c : configs) {
    if (c.dataset_path != configs.front().dataset_path) {
      throw Error(ErrorCode::dataset_mismatch,
                  "all compared methods must run on the same dataset");
    }
  }
  const Dataset ds = load_dataset(configs.front().dataset_path);

  std::vector<EvalReport> reports;
  for (const auto& c : configs) {
    reports.push_back(summarize(loo_cv(ds, c, jobs), ds.manifest.n_classes()));
  }
  const std::string text = render_comparison(reports, ds.manifest.name);

  const std::string dir_name = out_dir.empty() ? configs.front().output_dir : out_dir;
  const fs::path dir = ensure_out_dir(dir_name);
  write_text(text, (dir / "comparison.txt").string());
  for (const auto& r : reports) {
    write_report_csv(r, (dir / ("report_" + r.method + ".csv")).string());
  }
  std::cout << text;
  return 0;
}

int cmd_report(const std::string& outcomes_path, const std::string& out_dir,
               std::size_t k_override) {
  const auto outcomes = read_outcomes_csv(outcomes_path);
  std::size_t k = k_override;
  if (k == 0) {
    std::vector<double> freqs;
    for (const auto& o : outcomes) {
      if (std::find(freqs.begin(), freqs.end(), o.true_freq_hz) == freqs.end()) {
        freqs.push_back(o.true_freq_hz);
      }
    }
    k = freqs.size();
  }
  const EvalReport report = summarize(outcomes, k);
  const std::string text = render_report(report, outcomes_path);
  if (!out_dir.empty()) {
    const fs::path dir = ensure_out_dir(out_dir);
    write_text(text, (dir / "report.txt").string());
    write_report_csv(report, (dir / "report.csv").string());
  }
  std::cout << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SSVEP frequency recognition toolkit"};
  app.require_subcommand(1);

  CommonOpts sim_opts, val_opts, run_opts, grid_opts;
  std::vector<std::string> cmp_configs;
  std::vector<std::string> cmp_overrides;
  std::string cmp_out;
  std::size_t cmp_jobs = 1;
  std::string report_outcomes, report_out;
  std::size_t report_k = 0;

  auto* sim = app.add_subcommand("simulate", "Generate a synthetic dataset");
  add_common(sim, sim_opts, false);

  auto* val = app.add_subcommand("validate", "Check a config and its dataset");
  add_common(val, val_opts, false);

  auto* run = app.add_subcommand("run", "Run one method through LOO evaluation");
  add_common(run, run_opts);

  auto* grid = app.add_subcommand("gridsearch", "Exhaustive hyper-parameter search");
  add_common(grid, grid_opts);

  auto* cmp = app.add_subcommand("compare", "Compare methods on one dataset");
  cmp->add_option("--config", cmp_configs, "Config files (one per method)")
      ->required()
      ->expected(-2);
  cmp->add_option("--set", cmp_overrides, "Override applied to every config");
  cmp->add_option("--out", cmp_out, "Output directory");
  cmp->add_option("--jobs", cmp_jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* rep = app.add_subcommand("report", "Re-render tables from an outcomes CSV");
  rep->add_option("--outcomes", report_outcomes, "outcomes.csv from a run")->required();
  rep->add_option("--out", report_out, "Output directory");
  rep->add_option("--k", report_k, "Number of classes (default: distinct labels)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) return cmd_simulate(sim_opts);
    if (val->parsed()) return cmd_validate(val_opts);
    if (run->parsed()) return cmd_run(run_opts);
    if (grid->parsed()) return cmd_gridsearch(grid_opts);
    if (cmp->parsed()) return cmd_compare(cmp_configs, cmp_overrides, cmp_out, cmp_jobs);
    if (rep->parsed()) return cmd_report(report_outcomes, report_out, report_k);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEval;
  }
  return 0;
}
