#pragma once

#include <cstdint>
#include <map>

#include "selfrep/population.hpp"

namespace selfrep {

/// Event counts gathered while a generation executes.
struct StepCounters {
  Count satisfying = 0;       // agents that passed the rule (and replicated)
  Count births = 0;           // agents added: offspring, plus reseeded agents
  Count rule_deaths = 0;
  Count lifetime_deaths = 0;
  Count purged = 0;
  bool extinction_triggered = false;
};

/// Observables of one generation, taken after births, removals and purge.
struct GenerationStats {
  std::size_t generation = 0;
  Count population_total = 0;
  Count satisfying_total = 0;
  std::size_t distinct_genomes = 0;
  std::size_t max_complexity = 0;
  double mean_complexity = 0.0;
  std::map<std::size_t, Count> complexity_histogram;
  Count births = 0;
  Count rule_deaths = 0;
  Count lifetime_deaths = 0;
  Count purged = 0;
  bool extinction_triggered = false;
  /// Max complexity just before the purge step; equals max_complexity
  /// whenever no agents were purged.
  std::size_t pre_purge_max_complexity = 0;

  bool operator==(const GenerationStats&) const = default;
};

GenerationStats collect_stats(const Population& pop, std::size_t generation,
                              const StepCounters& counters = {});

/// Number of distinct genome values (lifetime and multiplicity ignored).
std::size_t distinct_genomes(const Population& pop);

std::size_t max_complexity(const Population& pop);

}  // namespace selfrep
