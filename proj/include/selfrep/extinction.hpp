#pragma once

#include "selfrep/population.hpp"
#include "selfrep/rules.hpp"

namespace selfrep {

enum class ExtinctionKind { none, low_complexity_purge };

/// Which agents define the complexity levels a purge ranks.
enum class PurgeLevels {
  /// Every agent present, including newborns the rule will reject next
  /// generation.
  all_agents,
  /// Only agents whose genome satisfies the replication rule. Longer
  /// non-viable agents are not removed; they die at their next evaluation.
  viable_agents,
};

/// Periodic selective extinction. When the population total strictly exceeds
/// trigger_threshold, every agent whose complexity is below the keep_top_k-th
/// highest ranked complexity level is removed.
struct ExtinctionPolicy {
  ExtinctionKind kind = ExtinctionKind::none;
  Count trigger_threshold = 1'000'000;
  std::size_t keep_top_k = 1;
  PurgeLevels levels = PurgeLevels::viable_agents;

  bool operator==(const ExtinctionPolicy&) const = default;
};

struct ExtinctionOutcome {
  bool triggered = false;
  Count purged = 0;
};

/// Purges `pop` in place according to `policy`. Ranking by viable agents
/// needs `rule`; without it, or when no agent is viable, all agents rank.
/// A non-empty population is never emptied and its max complexity is kept.
ExtinctionOutcome apply_extinction(Population& pop, const ExtinctionPolicy& policy,
                                   const ReplicationRule* rule = nullptr);

}  // namespace selfrep
