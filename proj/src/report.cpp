#include "selfrep/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

namespace selfrep {

namespace {

void write_file(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
  out << contents;
  if (!out) throw std::runtime_error(fmt::format("write failed for '{}'", path.string()));
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string series_csv(std::uint64_t seed, const RunResult& result) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& s : result.series) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}\n", seed, s.generation,
                       s.population_total, s.satisfying_total, s.distinct_genomes,
                       s.max_complexity, s.mean_complexity, s.births, s.rule_deaths,
                       s.lifetime_deaths, s.purged, s.extinction_triggered ? 1 : 0);
  }
  return out;
}

void write_series_csv(const std::filesystem::path& path, std::uint64_t seed,
                      const RunResult& result) {
  write_file(path, series_csv(seed, result));
}

std::string summary_json(const SimConfig& config, const std::vector<SeedOutcome>& outcomes) {
  if (outcomes.empty()) throw std::invalid_argument("no results");
  const SweepSummary summary = summarize(outcomes);

  nlohmann::ordered_json doc;
  doc["config"] = emit_config(config);
  doc["runs"] = nlohmann::ordered_json::array();
  for (const auto& o : outcomes) {
    nlohmann::ordered_json run;
    run["seed"] = o.seed;
    if (o.result) {
      const auto& last = o.result->series.back();
      run["termination"] = to_string(o.result->termination);
      run["generations_executed"] = o.result->generations_executed;
      run["final_population_total"] = last.population_total;
      run["final_max_complexity"] = last.max_complexity;
      run["final_distinct_genomes"] = last.distinct_genomes;
    } else {
      run["termination"] = "error";
      run["error"] = o.error;
    }
    doc["runs"].push_back(std::move(run));
  }
  doc["terminations"] = summary.terminations;
  doc["failed_seeds"] = summary.failed_seeds;
  doc["final_common_generation"] = summary.final_common_generation;
  auto& per_gen = doc["per_generation"] = nlohmann::ordered_json::array();
  for (const auto& g : summary.per_generation) {
    per_gen.push_back({{"generation", g.generation},
                       {"contributing_runs", g.contributing_runs},
                       {"mean_max_complexity", g.mean_max_complexity},
                       {"stddev_max_complexity", g.stddev_max_complexity},
                       {"mean_distinct_genomes", g.mean_distinct_genomes},
                       {"stddev_distinct_genomes", g.stddev_distinct_genomes},
                       {"mean_population_total", g.mean_population_total}});
  }
  return doc.dump(2) + "\n";
}

void write_summary(const std::filesystem::path& path, const SimConfig& config,
                   const std::vector<SeedOutcome>& outcomes) {
  write_file(path, summary_json(config, outcomes));
}

std::string_view to_string(ChartColumn c) {
  switch (c) {
    case ChartColumn::population_total: return "population_total";
    case ChartColumn::distinct_genomes: return "distinct_genomes";
    case ChartColumn::max_complexity: return "max_complexity";
    case ChartColumn::mean_complexity: return "mean_complexity";
  }
  return "unknown";
}

ChartSeries chart_column(const RunResult& result, ChartColumn column, std::string label) {
  ChartSeries s{std::move(label), {}, {}};
  for (const auto& g : result.series) {
    s.x.push_back(static_cast<double>(g.generation));
    switch (column) {
      case ChartColumn::population_total: s.y.push_back(static_cast<double>(g.population_total)); break;
      case ChartColumn::distinct_genomes: s.y.push_back(static_cast<double>(g.distinct_genomes)); break;
      case ChartColumn::max_complexity: s.y.push_back(static_cast<double>(g.max_complexity)); break;
      case ChartColumn::mean_complexity: s.y.push_back(g.mean_complexity); break;
    }
  }
  return s;
}

std::string render_chart_svg(const std::vector<ChartSeries>& series, const ChartOptions& opt) {
  static constexpr std::string_view kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                  "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
  const double left = 70, right = 20, top = 40, bottom = 50;
  const double plot_w = opt.width - left - right;
  const double plot_h = opt.height - top - bottom;

  auto ty = [&](double y) { return opt.log_y ? std::log10(std::max(y, 1.0)) : y; };
  double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
  bool first = true;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      const double y = ty(s.y[i]);
      if (first) {
        x_min = x_max = s.x[i];
        y_min = y_max = y;
        first = false;
      }
      x_min = std::min(x_min, s.x[i]);
      x_max = std::max(x_max, s.x[i]);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  y_min = std::min(y_min, 0.0);
  if (x_max <= x_min) x_max = x_min + 1;
  if (y_max <= y_min) y_max = y_min + 1;

  auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
  auto py = [&](double y) { return top + plot_h - (ty(y) - y_min) / (y_max - y_min) * plot_h; };

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\" font-size=\"12\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      "<text x=\"{2}\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">{3}</text>\n",
      opt.width, opt.height, opt.width / 2.0, xml_escape(opt.title));

  // Axes and ticks.
  svg += fmt::format(
      "<path d=\"M{0},{1} V{2} H{3}\" fill=\"none\" stroke=\"black\"/>\n", left, top,
      top + plot_h, left + plot_w);
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double fx = x_min + (x_max - x_min) * i / kTicks;
    const double fy = y_min + (y_max - y_min) * i / kTicks;
    const double sx = left + plot_w * i / kTicks;
    const double sy = top + plot_h - plot_h * i / kTicks;
    svg += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{:.0f}</text>\n", sx,
                       top + plot_h + 18, fx);
    const std::string label = opt.log_y ? fmt::format("1e{:.1f}", fy) : fmt::format("{:.3g}", fy);
    svg += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n", left - 6,
                       sy + 4, label);
  }
  svg += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">generation</text>\n",
                     left + plot_w / 2, opt.height - 10);
  svg += fmt::format(
      "<text transform=\"translate(16,{}) rotate(-90)\" text-anchor=\"middle\">{}</text>\n",
      top + plot_h / 2, xml_escape(opt.y_label));

  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    if (s.x.empty()) continue;
    std::string d = fmt::format("M{:.2f},{:.2f}", px(s.x[0]), py(s.y[0]));
    for (std::size_t i = 1; i < s.x.size(); ++i) {
      if (opt.stepped) d += fmt::format(" H{:.2f}", px(s.x[i]));
      d += fmt::format(" L{:.2f},{:.2f}", px(s.x[i]), py(s.y[i]));
    }
    const auto colour = kPalette[k % std::size(kPalette)];
    svg += fmt::format("<path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"/>\n", d,
                       colour);
    svg += fmt::format("<text x=\"{}\" y=\"{}\" fill=\"{}\">{}</text>\n", left + plot_w - 150,
                       top + 14 + 14 * static_cast<double>(k), colour, xml_escape(s.label));
  }
  svg += "</svg>\n";
  return svg;
}

void render_chart(const std::filesystem::path& path, const std::vector<ChartSeries>& series,
                  const ChartOptions& options) {
  write_file(path, render_chart_svg(series, options));
}

}  // namespace selfrep
