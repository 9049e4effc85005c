#include "selfrep/metrics.hpp"

#include <algorithm>

namespace selfrep {

std::size_t distinct_genomes(const Population& pop) {
  // Keys are sorted by genome first, so equal genomes are adjacent.
  std::size_t distinct = 0;
  const Genome* prev = nullptr;
  for (const auto& [key, count] : pop.cohorts()) {
    if (!prev || *prev != key.genome) ++distinct;
    prev = &key.genome;
  }
  return distinct;
}

std::size_t max_complexity(const Population& pop) {
  std::size_t best = 0;
  for (const auto& [key, count] : pop.cohorts()) best = std::max(best, key.genome.complexity());
  return best;
}

GenerationStats collect_stats(const Population& pop, std::size_t generation,
                              const StepCounters& counters) {
  GenerationStats s;
  s.generation = generation;
  s.population_total = pop.total();
  s.satisfying_total = counters.satisfying;
  s.births = counters.births;
  s.rule_deaths = counters.rule_deaths;
  s.lifetime_deaths = counters.lifetime_deaths;
  s.purged = counters.purged;
  s.extinction_triggered = counters.extinction_triggered;
  s.distinct_genomes = distinct_genomes(pop);

  long double weighted = 0.0L;
  for (const auto& [key, count] : pop.cohorts()) {
    const std::size_t level = key.genome.complexity();
    s.complexity_histogram[level] += count;
    weighted += static_cast<long double>(level) * static_cast<long double>(count);
  }
  if (!s.complexity_histogram.empty()) s.max_complexity = s.complexity_histogram.rbegin()->first;
  if (s.population_total > 0) {
    s.mean_complexity = static_cast<double>(weighted / static_cast<long double>(s.population_total));
  }
  s.pre_purge_max_complexity = s.max_complexity;
  return s;
}

}  // namespace selfrep
