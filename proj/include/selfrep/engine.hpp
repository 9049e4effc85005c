#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "selfrep/extinction.hpp"
#include "selfrep/metrics.hpp"
#include "selfrep/population.hpp"
#include "selfrep/random.hpp"
#include "selfrep/rules.hpp"

namespace selfrep {

enum class EngineMode { cohort, naive };

std::string_view to_string(EngineMode mode);

/// Inputs of the self-replication loop plus the choices it leaves open.
struct SimParams {
  std::size_t g_max = 500;
  int lifetime_L = 4;
  double p_m = 0.2;
  Count n_a = 100;
  std::vector<Element> element_set;  // E; must be non-empty with unique ids
  std::uint64_t seed = 1;
  EngineMode engine_mode = EngineMode::cohort;
  Count population_cap = 1'000'000;  // run stops once the total exceeds this
  bool reseed_on_extinction = true;
  bool stop_at_target = false;
  std::optional<std::size_t> target_complexity;  // defaults to the rule's hint
  std::size_t max_genome_length = 10'000;
  ExtinctionPolicy extinction;

  /// Throws std::invalid_argument naming the first bad field.
  void validate() const;

  bool operator==(const SimParams&) const = default;
};

/// E = {first, ..., last}.
std::vector<Element> element_range(Element first, Element last);

/// N=100, G_max=500, P_m=0.2, N_a=100, L=4 over E = {1..100}.
SimParams reference_defaults();

/// Per-agent callback run between the rule check and replication, once per
/// satisfying cohort with its agent count. Reserved for learning extensions;
/// the shipped simulations never install one.
struct EngineHooks {
  std::function<void(const Genome&, Count)> before_replication;
};

struct StepResult {
  Population population;
  GenerationStats stats;
};

/// Generation-0 population: n_a length-1 genomes drawn uniformly from E,
/// each with lifetime L.
Population init_population(const SimParams& params, Rng& rng);

/// Offspring of a rule-satisfying cohort: one child per agent, each an exact
/// copy with probability 1 - p_m or an additive/subtractive mutant. Drawn
/// with exact binomial and multinomial variates. All children have lifetime L.
std::vector<Cohort> sample_offspring(const Cohort& cohort, const SimParams& params, Rng& rng);

/// One synchronous generation over cohorts. Offspring born now are first
/// evaluated next generation.
StepResult step_generation(const Population& pop, const ReplicationRule& rule,
                           const SimParams& params, Rng& rng, std::size_t generation = 1,
                           const EngineHooks& hooks = {});

/// Same contract as step_generation, iterating individual agents with
/// independent draws per agent. Throws PopulationCapError when the input
/// exceeds params.population_cap.
StepResult naive_step_generation(const Population& pop, const ReplicationRule& rule,
                                 const SimParams& params, Rng& rng, std::size_t generation = 1,
                                 const EngineHooks& hooks = {});

enum class Termination {
  completed_g_max,
  target_reached,
  population_extinct,
  population_cap_exceeded,
  count_overflow,
};

std::string_view to_string(Termination t);

struct RunResult {
  /// series[0] describes the initial population; series[g] the state after
  /// generation g. Its size is generations_executed + 1.
  std::vector<GenerationStats> series;
  Termination termination = Termination::completed_g_max;
  std::size_t generations_executed = 0;
  std::chrono::nanoseconds wall_time{0};
};

/// Runs generations until g_max, target, extinction, cap or overflow.
/// `initial` replaces the random generation-0 population when given.
RunResult run(const SimParams& params, const ReplicationRule& rule,
              std::optional<Population> initial = std::nullopt, const EngineHooks& hooks = {});

}  // namespace selfrep
