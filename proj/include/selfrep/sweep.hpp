#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "selfrep/config.hpp"
#include "selfrep/engine.hpp"

namespace selfrep {

struct SeedOutcome {
  std::uint64_t seed = 0;
  std::optional<RunResult> result;  // empty when the run threw
  std::string error;
};

/// Across-run statistics at one generation, over runs whose series reach it.
struct GenerationAggregate {
  std::size_t generation = 0;
  std::size_t contributing_runs = 0;
  double mean_max_complexity = 0.0;
  double stddev_max_complexity = 0.0;
  double mean_distinct_genomes = 0.0;
  double stddev_distinct_genomes = 0.0;
  double mean_population_total = 0.0;
};

struct SweepSummary {
  std::vector<GenerationAggregate> per_generation;
  std::map<std::string, std::size_t> terminations;  // by termination name
  std::vector<std::uint64_t> failed_seeds;
  /// Last generation reached by every successful run.
  std::size_t final_common_generation = 0;
};

struct SweepResult {
  std::vector<SeedOutcome> outcomes;  // ascending seed order
  SweepSummary summary;
};

/// Aggregates per-seed outcomes; the result depends only on the set of
/// outcomes, not their order.
SweepSummary summarize(std::vector<SeedOutcome> outcomes);

/// Runs seeds seed_base .. seed_base + runs - 1 independently on up to
/// `threads` workers (0 = hardware concurrency). A failing seed is recorded
/// and does not stop the others.
SweepResult run_sweep(const SimConfig& config, unsigned threads = 0);

}  // namespace selfrep
