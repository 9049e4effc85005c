// Command-line front end: single runs, seed sweeps and the two reference demos.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "selfrep/config.hpp"
#include "selfrep/engine.hpp"
#include "selfrep/report.hpp"
#include "selfrep/sweep.hpp"

namespace fs = std::filesystem;
using namespace selfrep;

namespace {

struct CommonOptions {
  std::string engine;
  std::optional<std::string> out;
  bool chart = false;
};

void apply_common(SimConfig& config, const CommonOptions& opts) {
  if (opts.engine == "naive") config.params.engine_mode = EngineMode::naive;
  if (opts.engine == "cohort") config.params.engine_mode = EngineMode::cohort;
  if (opts.out) config.output_dir = *opts.out;
  if (opts.chart) config.emit_chart = true;
}

void write_charts(const fs::path& dir, const std::vector<SeedOutcome>& outcomes, bool purge) {
  const std::pair<ChartColumn, std::string> panels[] = {
      {ChartColumn::max_complexity, "maximum complexity"},
      {ChartColumn::distinct_genomes, "distinct genomes"},
      {ChartColumn::population_total, "population"},
  };
  for (const auto& [column, y_label] : panels) {
    std::vector<ChartSeries> lines;
    for (const auto& o : outcomes) {
      if (o.result) lines.push_back(chart_column(*o.result, column, fmt::format("seed {}", o.seed)));
      if (lines.size() == 8) break;
    }
    ChartOptions opt;
    opt.title = fmt::format("{} per generation", y_label);
    opt.y_label = y_label;
    opt.log_y = column == ChartColumn::population_total;
    opt.stepped = column == ChartColumn::max_complexity && purge;
    render_chart(dir / fmt::format("{}.svg", to_string(column)), lines, opt);
  }
}

int execute(const SimConfig& config) {
  const fs::path dir = config.output_dir;
  fs::create_directories(dir);
  std::cerr << fmt::format("running {} seed(s) from {} ({} engine, problem {})\n", config.runs,
                           config.seed_base, to_string(config.params.engine_mode),
                           to_string(config.problem));
  const SweepResult sweep = run_sweep(config);

  int status = EXIT_SUCCESS;
  for (const auto& o : sweep.outcomes) {
    if (!o.result) {
      std::cout << fmt::format("seed {}: error: {}\n", o.seed, o.error);
      status = EXIT_FAILURE;
      continue;
    }
    const auto& r = *o.result;
    const auto& last = r.series.back();
    write_series_csv(dir / fmt::format("run_{}.csv", o.seed), o.seed, r);
    std::cout << fmt::format(
        "seed {}: {} after {} generations, population {}, max complexity {}, "
        "distinct genomes {} ({:.3f} s)\n",
        o.seed, to_string(r.termination), r.generations_executed, last.population_total,
        last.max_complexity, last.distinct_genomes,
        std::chrono::duration<double>(r.wall_time).count());
  }
  std::ofstream(dir / "config.txt") << emit_config(config);
  write_summary(dir / "summary.json", config, sweep.outcomes);
  if (config.emit_chart) {
    write_charts(dir, sweep.outcomes,
                 config.params.extinction.kind != ExtinctionKind::none);
  }
  std::cout << fmt::format("wrote results to {}\n", dir.string());
  return status;
}

SimConfig load_or_default(const std::optional<std::string>& path) {
  return path ? load_config(*path) : parse_config("");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-replicating agent populations: simulation and experiment runner"};
  app.require_subcommand(1);

  CommonOptions common;
  app.add_option("--engine", common.engine, "Engine mode")
      ->check(CLI::IsMember({"cohort", "naive"}));

  std::optional<std::string> config_path;
  std::optional<std::uint64_t> seed;
  std::size_t runs = 1;

  auto* run_cmd = app.add_subcommand("run", "Run one seed and write its CSV");
  run_cmd->fallthrough();
  run_cmd->add_option("--config", config_path, "Config file (key = value)")->required();
  run_cmd->add_option("--seed", seed, "RNG seed (overrides the config)");
  run_cmd->add_option("--out", common.out, "Output directory");
  run_cmd->add_flag("--chart", common.chart, "Also write SVG charts");

  auto* sweep_cmd = app.add_subcommand("sweep", "Run seeds seed_base .. seed_base+runs-1");
  sweep_cmd->fallthrough();
  sweep_cmd->add_option("--config", config_path, "Config file (key = value)")->required();
  sweep_cmd->add_option("--runs", runs, "Number of seeds")->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", common.out, "Output directory");
  sweep_cmd->add_flag("--chart", common.chart, "Also write SVG charts");

  bool purge = false;
  auto* primes_cmd = app.add_subcommand("primes-demo", "Prime-sequence problem, reference settings");
  primes_cmd->fallthrough();
  primes_cmd->add_option("--seed", seed, "RNG seed");
  primes_cmd->add_option("--out", common.out, "Output directory");
  primes_cmd->add_flag("--purge", purge,
                       "Enable low-complexity purges and stop at the full prime sequence");
  primes_cmd->add_flag("--chart", common.chart, "Also write SVG charts");

  auto* onemax_cmd = app.add_subcommand("onemax-demo", "OneMax (target length 20) with purges");
  onemax_cmd->fallthrough();
  onemax_cmd->add_option("--seed", seed, "RNG seed");
  onemax_cmd->add_option("--out", common.out, "Output directory");
  onemax_cmd->add_flag("--chart", common.chart, "Also write SVG charts");

  auto* print_cmd = app.add_subcommand("print-config", "Print the effective configuration");
  print_cmd->add_option("--config", config_path, "Config file (defaults if omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    SimConfig config;
    if (*print_cmd) {
      std::cout << emit_config(load_or_default(config_path));
      return EXIT_SUCCESS;
    }
    if (*run_cmd || *sweep_cmd) {
      config = load_config(*config_path);
      if (*sweep_cmd) config.runs = runs;
      if (*run_cmd) {
        config.runs = 1;
        config.seed_base = seed.value_or(config.params.seed);
      }
    } else if (*primes_cmd) {
      config = parse_config(purge ? "extinction.policy = low_complexity_purge\n"
                                    "stop_at_target = true\n"
                                    "g_max = 50000\n"
                                  : "");
      config.seed_base = seed.value_or(1);
    } else {
      config = parse_config(
          "problem = onemax\n"
          "onemax.target_len = 20\n"
          "g_max = 20000\n"
          "extinction.policy = low_complexity_purge\n");
      config.seed_base = seed.value_or(1);
    }
    apply_common(config, common);
    return execute(config);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return EXIT_FAILURE;
}
