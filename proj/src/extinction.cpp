#include "selfrep/extinction.hpp"

#include <set>

namespace selfrep {

namespace {

using Levels = std::set<std::size_t, std::greater<>>;

Levels ranked_levels(const Population& pop, const ExtinctionPolicy& policy,
                     const ReplicationRule* rule) {
  Levels levels;
  if (policy.levels == PurgeLevels::viable_agents && rule) {
    for (const auto& [key, count] : pop.cohorts()) {
      if ((*rule)(key.genome)) levels.insert(key.genome.complexity());
    }
    if (!levels.empty()) return levels;
  }
  for (const auto& [key, count] : pop.cohorts()) levels.insert(key.genome.complexity());
  return levels;
}

}  // namespace

ExtinctionOutcome apply_extinction(Population& pop, const ExtinctionPolicy& policy,
                                   const ReplicationRule* rule) {
  if (policy.kind == ExtinctionKind::none || pop.total() <= policy.trigger_threshold) return {};

  const Levels levels = ranked_levels(pop, policy, rule);
  auto cutoff_it = levels.begin();
  for (std::size_t i = 1; i < policy.keep_top_k && std::next(cutoff_it) != levels.end(); ++i) {
    ++cutoff_it;
  }
  const std::size_t cutoff = *cutoff_it;

  const Count purged = pop.retain_if(
      [cutoff](const Population::Key& key) { return key.genome.complexity() >= cutoff; });
  return {true, purged};
}

}  // namespace selfrep
