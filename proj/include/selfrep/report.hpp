#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "selfrep/config.hpp"
#include "selfrep/engine.hpp"
#include "selfrep/sweep.hpp"

namespace selfrep {

/// Column order of the per-run CSV.
inline constexpr std::string_view kCsvHeader =
    "run_seed,generation,population_total,satisfying_total,distinct_genomes,max_complexity,"
    "mean_complexity,births,rule_deaths,lifetime_deaths,purged,extinction_triggered";

std::string series_csv(std::uint64_t seed, const RunResult& result);
void write_series_csv(const std::filesystem::path& path, std::uint64_t seed, const RunResult& result);

/// JSON document with the effective config, per-seed terminations and the
/// sweep aggregates. Throws std::invalid_argument("no results") when empty.
std::string summary_json(const SimConfig& config, const std::vector<SeedOutcome>& outcomes);
void write_summary(const std::filesystem::path& path, const SimConfig& config,
                   const std::vector<SeedOutcome>& outcomes);

struct ChartSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

enum class ChartColumn { population_total, distinct_genomes, max_complexity, mean_complexity };

std::string_view to_string(ChartColumn c);

/// One column of a run's series against generation.
ChartSeries chart_column(const RunResult& result, ChartColumn column, std::string label);

struct ChartOptions {
  std::string title;
  std::string y_label;
  bool log_y = false;
  bool stepped = false;
  int width = 800;
  int height = 480;
};

/// Line plot as a standalone SVG document.
std::string render_chart_svg(const std::vector<ChartSeries>& series, const ChartOptions& options);
void render_chart(const std::filesystem::path& path, const std::vector<ChartSeries>& series,
                  const ChartOptions& options);

}  // namespace selfrep
