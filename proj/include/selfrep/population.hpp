#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace selfrep {

/// Identifier of a fundamental element.
using Element = std::uint32_t;

/// Number of identical agents. Stored unsigned but capped at 2^63 - 1.
using Count = std::uint64_t;

inline constexpr Count kMaxCount = static_cast<Count>(std::numeric_limits<std::int64_t>::max());

/// Ordered element sequence; its length is the agent's complexity.
struct Genome {
  std::vector<Element> elements;

  Genome() = default;
  Genome(std::initializer_list<Element> init) : elements(init) {}
  explicit Genome(std::vector<Element> e) : elements(std::move(e)) {}

  std::size_t complexity() const { return elements.size(); }
  bool empty() const { return elements.empty(); }

  auto operator<=>(const Genome&) const = default;
  bool operator==(const Genome&) const = default;
};

std::string to_string(const Genome& genome);

class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CountOverflowError : public SimulationError {
 public:
  CountOverflowError() : SimulationError("agent count exceeds 2^63 - 1") {}
};

class PopulationCapError : public SimulationError {
 public:
  using SimulationError::SimulationError;
};

class GenomeLengthError : public SimulationError {
 public:
  using SimulationError::SimulationError;
};

/// a + b, throwing CountOverflowError past kMaxCount.
Count checked_add(Count a, Count b);

/// Identical agents sharing a genome and remaining lifetime.
struct Cohort {
  Genome genome;
  int lifetime = 0;
  Count count = 0;

  bool operator==(const Cohort&) const = default;
};

/// Multiset of agents stored as cohorts keyed by (genome, lifetime).
///
/// Iteration order is the key order, so every pass over a population is
/// deterministic. Cohorts with zero count are never stored.
class Population {
 public:
  struct Key {
    Genome genome;
    int lifetime;
    auto operator<=>(const Key&) const = default;
    bool operator==(const Key&) const = default;
  };
  using Map = std::map<Key, Count>;

  Population() = default;

  /// Merges `count` agents into the (genome, lifetime) cohort.
  void add(const Genome& genome, int lifetime, Count count);
  void add(Genome&& genome, int lifetime, Count count);
  void add(const Cohort& cohort) { add(cohort.genome, cohort.lifetime, cohort.count); }

  Count total() const { return total_; }
  bool empty() const { return cohorts_.empty(); }
  std::size_t cohort_count() const { return cohorts_.size(); }
  const Map& cohorts() const { return cohorts_; }

  std::vector<Cohort> to_cohorts() const;

  /// Keeps the cohorts for which pred(key) is true; returns the number of
  /// agents removed.
  template <typename Pred>
  Count retain_if(Pred pred) {
    Count removed = 0;
    for (auto it = cohorts_.begin(); it != cohorts_.end();) {
      if (pred(it->first)) {
        ++it;
      } else {
        removed += it->second;
        it = cohorts_.erase(it);
      }
    }
    total_ -= removed;
    return removed;
  }

  bool operator==(const Population&) const = default;

 private:
  Map cohorts_;
  Count total_ = 0;
};

}  // namespace selfrep
