#include <doctest.h>

#include <set>

#include "selfrep/extinction.hpp"
#include "selfrep/metrics.hpp"
#include "selfrep/random.hpp"

using namespace selfrep;

namespace {

ExtinctionPolicy purge(Count threshold, std::size_t k, PurgeLevels levels = PurgeLevels::all_agents) {
  return {ExtinctionKind::low_complexity_purge, threshold, k, levels};
}

std::set<std::size_t> levels_of(const Population& pop) {
  std::set<std::size_t> out;
  for (const auto& [key, count] : pop.cohorts()) out.insert(key.genome.complexity());
  return out;
}

Population random_population(Rng& rng) {
  Population pop;
  const auto cohorts = 1 + rng.uniform_below(12);
  for (std::uint64_t i = 0; i < cohorts; ++i) {
    Genome g;
    const auto len = rng.uniform_below(6);
    for (std::uint64_t j = 0; j < len; ++j) g.elements.push_back(static_cast<Element>(rng.uniform_below(3)));
    pop.add(g, 1 + static_cast<int>(rng.uniform_below(4)), 1 + rng.uniform_below(50));
  }
  return pop;
}

}  // namespace

TEST_CASE("kind none is the identity") {
  Population pop;
  pop.add({1}, 4, 5'000'000);
  const Population before = pop;
  const auto out = apply_extinction(pop, ExtinctionPolicy{});
  CHECK_FALSE(out.triggered);
  CHECK(pop == before);
}

TEST_CASE("purge keeps only the top complexity level") {
  Population pop;
  pop.add({2}, 4, 1'000'000);
  pop.add({2, 3, 5}, 4, 5);
  const auto out = apply_extinction(pop, purge(1'000'000, 1));
  CHECK(out.triggered);
  CHECK(out.purged == 1'000'000);
  CHECK(pop.total() == 5);
  CHECK(levels_of(pop) == std::set<std::size_t>{3});
}

TEST_CASE("trigger is strict: exactly the threshold does not purge") {
  Population pop;
  pop.add({2}, 4, 999'999);
  pop.add({2, 3}, 4, 1);
  const Population before = pop;
  CHECK_FALSE(apply_extinction(pop, purge(1'000'000, 1)).triggered);
  CHECK(pop == before);
}

TEST_CASE("purge top-k property, max preservation and idempotence (random populations)") {
  Rng rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    Population pop = random_population(rng);
    const auto before_levels = levels_of(pop);
    const auto before_max = max_complexity(pop);
    const std::size_t k = 1 + rng.uniform_below(4);
    const Count threshold = 1 + rng.uniform_below(pop.total() + 5);
    const auto out = apply_extinction(pop, purge(threshold, k));

    CHECK(out.triggered == (before_levels.size() > 0 && threshold < pop.total() + out.purged));
    if (!out.triggered) continue;
    std::set<std::size_t> expected;
    for (auto it = before_levels.rbegin(); it != before_levels.rend() && expected.size() < k; ++it) {
      expected.insert(*it);
    }
    CHECK(levels_of(pop) == expected);
    CHECK(max_complexity(pop) == before_max);
    CHECK_FALSE(pop.empty());

    if (pop.total() <= threshold) {
      const Population once = pop;
      CHECK_FALSE(apply_extinction(pop, purge(threshold, k)).triggered);
      CHECK(pop == once);
    }
  }
}

TEST_CASE("viable-level purge ranks by rule-satisfying agents") {
  const auto rule = make_primes_rule(100);
  Population pop;
  pop.add({2}, 4, 600'000);
  pop.add({2, 3}, 3, 300'000);
  pop.add({2, 3}, 4, 200'000);
  pop.add({2, 3, 9}, 4, 1'000);   // newborn, fails the rule
  pop.add({2, 3, 5}, 4, 10);      // newborn, viable

  SUBCASE("all-agents ranking keeps the three-element level") {
    Population p = pop;
    apply_extinction(p, purge(1'000'000, 1, PurgeLevels::all_agents), &rule);
    CHECK(levels_of(p) == std::set<std::size_t>{3});
    CHECK(p.total() == 1'010);
  }
  SUBCASE("viable ranking with the next level viable behaves the same") {
    Population p = pop;
    apply_extinction(p, purge(1'000'000, 1, PurgeLevels::viable_agents), &rule);
    CHECK(p.total() == 1'010);
  }
  SUBCASE("no viable agent at the top: viable ranking keeps the viable level below") {
    Population p = pop;
    p.retain_if([](const Population::Key& key) { return key.genome != Genome{2, 3, 5}; });
    Population literal = p;
    apply_extinction(literal, purge(1'000'000, 1, PurgeLevels::all_agents), &rule);
    CHECK(literal.total() == 1'000);  // only doomed agents left

    const auto out = apply_extinction(p, purge(1'000'000, 1, PurgeLevels::viable_agents), &rule);
    CHECK(out.purged == 600'000);
    CHECK(levels_of(p) == std::set<std::size_t>{2, 3});
    CHECK(max_complexity(p) == 3);
  }
  SUBCASE("viable ranking without a rule falls back to all agents") {
    Population p = pop;
    apply_extinction(p, purge(1'000'000, 1, PurgeLevels::viable_agents));
    CHECK(levels_of(p) == std::set<std::size_t>{3});
  }
}

TEST_CASE("keep_top_k larger than the number of levels keeps everything") {
  Population pop;
  pop.add({1}, 4, 10);
  pop.add({1, 1}, 4, 10);
  const auto out = apply_extinction(pop, purge(5, 10));
  CHECK(out.triggered);
  CHECK(out.purged == 0);
  CHECK(pop.total() == 20);
}
