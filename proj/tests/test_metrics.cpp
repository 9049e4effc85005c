#include <doctest.h>

#include "selfrep/metrics.hpp"

using namespace selfrep;

TEST_CASE("collect_stats on an empty population") {
  const auto s = collect_stats(Population{}, 3);
  CHECK(s.generation == 3);
  CHECK(s.population_total == 0);
  CHECK(s.distinct_genomes == 0);
  CHECK(s.max_complexity == 0);
  CHECK(s.mean_complexity == 0.0);
  CHECK(s.complexity_histogram.empty());
}

TEST_CASE("collect_stats direct count") {
  Population pop;
  pop.add({2}, 3, 4);
  pop.add({2}, 4, 1);
  pop.add({2, 3}, 4, 2);
  StepCounters c;
  c.births = 9;
  c.rule_deaths = 1;
  c.extinction_triggered = true;
  const auto s = collect_stats(pop, 1, c);
  CHECK(s.population_total == 7);
  CHECK(s.distinct_genomes == 2);
  CHECK(s.max_complexity == 2);
  CHECK(s.complexity_histogram == std::map<std::size_t, Count>{{1, 5}, {2, 2}});
  CHECK(s.mean_complexity == doctest::Approx(9.0 / 7.0));
  CHECK(s.births == 9);
  CHECK(s.rule_deaths == 1);
  CHECK(s.extinction_triggered);
}

TEST_CASE("diversity ignores lifetime and multiplicity") {
  Population split, merged;
  split.add({1, 1}, 1, 3);
  split.add({1, 1}, 2, 3);
  split.add({1}, 4, 1);
  split.add({}, 4, 2);
  merged.add({1, 1}, 4, 6);
  merged.add({1}, 4, 1);
  merged.add({}, 4, 2);
  CHECK(distinct_genomes(split) == 3);
  CHECK(distinct_genomes(split) == distinct_genomes(merged));

  const auto s = collect_stats(split, 0);
  Count hist_total = 0;
  for (const auto& [level, count] : s.complexity_histogram) hist_total += count;
  CHECK(hist_total == s.population_total);
  CHECK(s.complexity_histogram.at(0) == 2);
  CHECK(s.distinct_genomes <= s.population_total);
}
