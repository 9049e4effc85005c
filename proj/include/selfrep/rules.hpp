#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "selfrep/population.hpp"

namespace selfrep {

/// Gate on survival and self-replication. The predicate must be pure.
struct ReplicationRule {
  std::string name;
  std::function<bool(const Genome&)> predicate;
  /// Longest genome the rule can accept, when bounded (e.g. number of
  /// primes <= N), or the target length of an unbounded problem.
  std::optional<std::size_t> max_complexity_hint;

  bool operator()(const Genome& genome) const { return predicate(genome); }
};

/// Ascending primes <= limit (sieve of Eratosthenes).
std::vector<Element> prime_sieve(std::uint32_t limit);

/// True iff genome is non-empty and equals the first |genome| primes <= limit.
bool prime_sequence_satisfies(const Genome& genome, std::uint32_t limit);

/// Same test against an already computed ascending prime list.
bool is_prefix_of(const Genome& genome, std::span<const Element> sequence);

/// True iff genome is non-empty and every element is 1.
bool all_ones_satisfies(const Genome& genome);

ReplicationRule make_primes_rule(std::uint32_t limit);
ReplicationRule make_onemax_rule(std::optional<std::size_t> target_len = std::nullopt);

/// Experimental: accepts non-empty prefixes of an arbitrary user sequence.
/// Not one of the two reference problems.
ReplicationRule make_sequence_prefix_rule(std::vector<Element> sequence);

}  // namespace selfrep
