#include "selfrep/engine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

#include "selfrep/mutation.hpp"

namespace selfrep {

std::string_view to_string(EngineMode mode) {
  return mode == EngineMode::cohort ? "cohort" : "naive";
}

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::completed_g_max: return "completed_g_max";
    case Termination::target_reached: return "target_reached";
    case Termination::population_extinct: return "population_extinct";
    case Termination::population_cap_exceeded: return "population_cap_exceeded";
    case Termination::count_overflow: return "count_overflow";
  }
  return "unknown";
}

void SimParams::validate() const {
  auto fail = [](std::string_view field, std::string_view why) {
    throw std::invalid_argument(fmt::format("{}: {}", field, why));
  };
  if (g_max < 1) fail("g_max", "must be >= 1");
  if (lifetime_L < 1) fail("lifetime_L", "must be >= 1");
  if (!(p_m >= 0.0 && p_m <= 1.0)) fail("p_m", "must lie in [0, 1]");
  if (n_a < 1) fail("n_a", "must be >= 1");
  if (n_a > kMaxCount) fail("n_a", "exceeds 2^63 - 1");
  if (element_set.empty()) fail("element_set", "must be non-empty");
  if (std::set<Element>(element_set.begin(), element_set.end()).size() != element_set.size()) {
    fail("element_set", "contains duplicate elements");
  }
  if (population_cap < 1) fail("population_cap", "must be >= 1");
  if (max_genome_length < 1) fail("max_genome_length", "must be >= 1");
  if (extinction.trigger_threshold < 1) fail("extinction.threshold", "must be >= 1");
  if (extinction.keep_top_k < 1) fail("extinction.keep_top_k", "must be >= 1");
}

std::vector<Element> element_range(Element first, Element last) {
  std::vector<Element> out;
  for (std::uint64_t e = first; e <= last; ++e) out.push_back(static_cast<Element>(e));
  return out;
}

SimParams reference_defaults() {
  SimParams p;
  p.element_set = element_range(1, 100);
  return p;
}

Population init_population(const SimParams& params, Rng& rng) {
  Population pop;
  const auto& e = params.element_set;
  // Per-agent draws; n_a is small compared to the populations that follow.
  if (params.n_a <= 4 * e.size()) {
    for (Count i = 0; i < params.n_a; ++i) {
      pop.add(Genome{e[rng.uniform_below(e.size())]}, params.lifetime_L, 1);
    }
    return pop;
  }
  const auto counts = rng.multinomial_uniform(params.n_a, e.size());
  for (std::size_t i = 0; i < e.size(); ++i) pop.add(Genome{e[i]}, params.lifetime_L, counts[i]);
  return pop;
}

namespace {

void check_can_grow(const Genome& genome, const SimParams& params) {
  if (genome.complexity() >= params.max_genome_length) {
    throw GenomeLengthError(fmt::format("additive mutation would exceed max_genome_length={}",
                                        params.max_genome_length));
  }
}

}  // namespace

std::vector<Cohort> sample_offspring(const Cohort& cohort, const SimParams& params, Rng& rng) {
  std::vector<Cohort> out;
  const int L = params.lifetime_L;
  const Count mutants = rng.binomial(cohort.count, params.p_m);
  if (cohort.count > mutants) out.push_back({cohort.genome, L, cohort.count - mutants});
  if (mutants == 0) return out;

  const Count additive = cohort.genome.empty() ? mutants : rng.binomial(mutants, 0.5);
  const Count subtractive = mutants - additive;

  if (additive > 0) {
    check_can_grow(cohort.genome, params);
    const auto& e = params.element_set;
    const auto per_element = rng.multinomial_uniform(additive, e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (per_element[i] == 0) continue;
      Genome child = cohort.genome;
      child.elements.push_back(e[i]);
      out.push_back({std::move(child), L, per_element[i]});
    }
  }
  if (subtractive > 0) {
    const auto per_position = rng.multinomial_uniform(subtractive, cohort.genome.complexity());
    for (std::size_t i = 0; i < per_position.size(); ++i) {
      if (per_position[i] == 0) continue;
      Genome child = cohort.genome;
      child.elements.erase(child.elements.begin() + static_cast<std::ptrdiff_t>(i));
      out.push_back({std::move(child), L, per_position[i]});
    }
  }
  return out;
}

namespace {

// Shared skeleton of both step variants. `replicate` adds the offspring of a
// satisfying (genome, count) group to `next`.
template <typename Replicate>
StepResult step_impl(const Population& pop, const ReplicationRule& rule, std::size_t generation,
                     const EngineHooks& hooks, Replicate&& replicate) {
  StepResult result;
  Population& next = result.population;
  StepCounters counters;

  for (const auto& [key, count] : pop.cohorts()) {
    if (!rule(key.genome)) {
      counters.rule_deaths = checked_add(counters.rule_deaths, count);
      continue;
    }
    counters.satisfying = checked_add(counters.satisfying, count);
    if (hooks.before_replication) hooks.before_replication(key.genome, count);
    replicate(key, count, next);

    const int remaining = key.lifetime - 1;
    if (remaining <= 0) {
      counters.lifetime_deaths = checked_add(counters.lifetime_deaths, count);
    } else {
      next.add(key.genome, remaining, count);
    }
  }
  counters.births = counters.satisfying;
  result.stats = collect_stats(next, generation, counters);
  return result;
}

}  // namespace

StepResult step_generation(const Population& pop, const ReplicationRule& rule,
                           const SimParams& params, Rng& rng, std::size_t generation,
                           const EngineHooks& hooks) {
  return step_impl(pop, rule, generation, hooks,
                   [&](const Population::Key& key, Count count, Population& next) {
                     const Cohort parent{key.genome, key.lifetime, count};
                     for (auto& child : sample_offspring(parent, params, rng)) {
                       next.add(std::move(child.genome), child.lifetime, child.count);
                     }
                   });
}

StepResult naive_step_generation(const Population& pop, const ReplicationRule& rule,
                                 const SimParams& params, Rng& rng, std::size_t generation,
                                 const EngineHooks& hooks) {
  if (pop.total() > params.population_cap) {
    throw PopulationCapError(fmt::format("naive step refused: {} agents exceed population_cap={}",
                                         pop.total(), params.population_cap));
  }
  return step_impl(pop, rule, generation, hooks,
                   [&](const Population::Key& key, Count count, Population& next) {
                     for (Count agent = 0; agent < count; ++agent) {
                       if (!rng.bernoulli(params.p_m)) {
                         next.add(key.genome, params.lifetime_L, 1);
                         continue;
                       }
                       MutationKind kind{};
                       Genome child = mutate(key.genome, params.element_set, rng, &kind);
                       if (kind == MutationKind::additive) check_can_grow(key.genome, params);
                       next.add(std::move(child), params.lifetime_L, 1);
                     }
                   });
}

namespace {

bool has_satisfying_at_least(const Population& pop, const ReplicationRule& rule,
                             std::size_t target) {
  for (const auto& [key, count] : pop.cohorts()) {
    if (key.genome.complexity() >= target && rule(key.genome)) return true;
  }
  return false;
}

}  // namespace

RunResult run(const SimParams& params, const ReplicationRule& rule,
              std::optional<Population> initial, const EngineHooks& hooks) {
  params.validate();
  const auto started = std::chrono::steady_clock::now();
  RunResult result;
  Rng rng(params.seed);

  const std::optional<std::size_t> target =
      params.target_complexity ? params.target_complexity : rule.max_complexity_hint;

  Population pop = initial ? std::move(*initial) : init_population(params, rng);

  // Returns true when the run should stop after recording `stats`.
  auto finish_generation = [&](const Population& current, GenerationStats stats) {
    result.series.push_back(std::move(stats));
    if (params.stop_at_target && target && has_satisfying_at_least(current, rule, *target)) {
      result.termination = Termination::target_reached;
      return true;
    }
    if (current.empty()) {
      result.termination = Termination::population_extinct;
      return true;
    }
    if (current.total() > params.population_cap) {
      result.termination = Termination::population_cap_exceeded;
      return true;
    }
    return false;
  };

  bool stop = finish_generation(pop, collect_stats(pop, 0));
  while (!stop && result.generations_executed < params.g_max) {
    const std::size_t generation = result.generations_executed + 1;
    StepResult step;
    try {
      step = params.engine_mode == EngineMode::cohort
                 ? step_generation(pop, rule, params, rng, generation, hooks)
                 : naive_step_generation(pop, rule, params, rng, generation, hooks);
    } catch (const CountOverflowError&) {
      result.termination = Termination::count_overflow;
      break;
    } catch (const PopulationCapError&) {
      result.termination = Termination::population_cap_exceeded;
      break;
    }
    pop = std::move(step.population);
    GenerationStats stats = std::move(step.stats);

    const ExtinctionOutcome purge = apply_extinction(pop, params.extinction, &rule);
    bool recollect = purge.triggered;
    StepCounters counters{stats.satisfying_total, stats.births, stats.rule_deaths,
                          stats.lifetime_deaths, purge.purged, purge.triggered};

    if (pop.empty() && params.reseed_on_extinction) {
      pop = init_population(params, rng);
      counters.births += pop.total();
      recollect = true;
    }
    if (recollect) {
      const std::size_t pre_purge_max = stats.max_complexity;
      stats = collect_stats(pop, generation, counters);
      stats.pre_purge_max_complexity = pre_purge_max;
    }
    result.generations_executed = generation;
    stop = finish_generation(pop, std::move(stats));
  }
  result.wall_time = std::chrono::steady_clock::now() - started;
  return result;
}

}  // namespace selfrep
