#include "selfrep/rules.hpp"

#include <algorithm>
#include <memory>

namespace selfrep {

std::vector<Element> prime_sieve(std::uint32_t limit) {
  std::vector<Element> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<Element>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

bool is_prefix_of(const Genome& genome, std::span<const Element> sequence) {
  if (genome.empty() || genome.complexity() > sequence.size()) return false;
  return std::equal(genome.elements.begin(), genome.elements.end(), sequence.begin());
}

bool prime_sequence_satisfies(const Genome& genome, std::uint32_t limit) {
  return is_prefix_of(genome, prime_sieve(limit));
}

bool all_ones_satisfies(const Genome& genome) {
  return !genome.empty() &&
         std::all_of(genome.elements.begin(), genome.elements.end(),
                     [](Element e) { return e == 1; });
}

ReplicationRule make_primes_rule(std::uint32_t limit) {
  auto primes = std::make_shared<const std::vector<Element>>(prime_sieve(limit));
  const std::size_t hint = primes->size();
  return {"primes",
          [primes = std::move(primes)](const Genome& g) { return is_prefix_of(g, *primes); },
          hint};
}

ReplicationRule make_onemax_rule(std::optional<std::size_t> target_len) {
  return {"onemax", all_ones_satisfies, target_len};
}

ReplicationRule make_sequence_prefix_rule(std::vector<Element> sequence) {
  auto seq = std::make_shared<const std::vector<Element>>(std::move(sequence));
  const std::size_t hint = seq->size();
  return {"sequence",
          [seq = std::move(seq)](const Genome& g) { return is_prefix_of(g, *seq); },
          hint};
}

}  // namespace selfrep
