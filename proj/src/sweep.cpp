#include "selfrep/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace selfrep {

namespace {

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;
  void add(double x) {
    sum += x;
    sum_sq += x * x;
  }
  double mean(std::size_t n) const { return sum / static_cast<double>(n); }
  double stddev(std::size_t n) const {
    if (n < 2) return 0.0;
    const double m = mean(n);
    const double var = (sum_sq - static_cast<double>(n) * m * m) / static_cast<double>(n - 1);
    return var > 0.0 ? std::sqrt(var) : 0.0;
  }
};

}  // namespace

SweepSummary summarize(std::vector<SeedOutcome> outcomes) {
  std::sort(outcomes.begin(), outcomes.end(),
            [](const SeedOutcome& a, const SeedOutcome& b) { return a.seed < b.seed; });
  SweepSummary summary;
  std::size_t longest = 0;
  std::optional<std::size_t> common;
  for (const auto& o : outcomes) {
    if (!o.result) {
      summary.failed_seeds.push_back(o.seed);
      ++summary.terminations["error"];
      continue;
    }
    ++summary.terminations[std::string(to_string(o.result->termination))];
    const std::size_t len = o.result->series.size();
    longest = std::max(longest, len);
    common = std::min(common.value_or(len), len);
  }
  summary.final_common_generation = common.value_or(1) - 1;

  for (std::size_t g = 0; g < longest; ++g) {
    Moments maxc, distinct, total;
    std::size_t n = 0;
    for (const auto& o : outcomes) {
      if (!o.result || g >= o.result->series.size()) continue;
      const GenerationStats& s = o.result->series[g];
      maxc.add(static_cast<double>(s.max_complexity));
      distinct.add(static_cast<double>(s.distinct_genomes));
      total.add(static_cast<double>(s.population_total));
      ++n;
    }
    summary.per_generation.push_back({g, n, maxc.mean(n), maxc.stddev(n), distinct.mean(n),
                                      distinct.stddev(n), total.mean(n)});
  }
  return summary;
}

SweepResult run_sweep(const SimConfig& config, unsigned threads) {
  const ReplicationRule rule = make_rule(config);
  std::vector<SeedOutcome> outcomes(config.runs);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < outcomes.size(); i = next++) {
      SeedOutcome& o = outcomes[i];
      o.seed = config.seed_base + i;
      SimParams params = config.params;
      params.seed = o.seed;
      try {
        o.result = run(params, rule);
      } catch (const std::exception& e) {
        o.error = e.what();
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, outcomes.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SweepResult result;
  result.summary = summarize(outcomes);
  result.outcomes = std::move(outcomes);
  return result;
}

}  // namespace selfrep
