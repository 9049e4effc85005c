#include <doctest.h>

#include <algorithm>
#include <functional>

#include "selfrep/rules.hpp"

using namespace selfrep;

namespace {

// Independent oracle: trial division.
bool is_prime_by_trial_division(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Every genome of length 0..max_len over elements lo..hi.
void for_each_genome(std::size_t max_len, Element lo, Element hi,
                     const std::function<void(const Genome&)>& visit) {
  Genome g;
  std::function<void()> rec = [&] {
    visit(g);
    if (g.complexity() == max_len) return;
    for (Element e = lo; e <= hi; ++e) {
      g.elements.push_back(e);
      rec();
      g.elements.pop_back();
    }
  };
  rec();
}

}  // namespace

TEST_CASE("prime_sieve") {
  CHECK(prime_sieve(1).empty());
  CHECK(prime_sieve(2) == std::vector<Element>{2});
  CHECK(prime_sieve(10) == std::vector<Element>{2, 3, 5, 7});

  const auto primes = prime_sieve(100);
  CHECK(primes.size() == 25);
  CHECK(primes.back() == 97);

  for (std::uint32_t limit : {1u, 2u, 3u, 30u, 100u, 1000u}) {
    std::vector<Element> oracle;
    for (std::uint32_t n = 1; n <= limit; ++n) {
      if (is_prime_by_trial_division(n)) oracle.push_back(n);
    }
    CHECK(prime_sieve(limit) == oracle);
  }
}

TEST_CASE("prime_sequence_satisfies examples") {
  CHECK(prime_sequence_satisfies({2, 3, 5}, 100));
  CHECK_FALSE(prime_sequence_satisfies({2, 3, 7}, 100));
  CHECK_FALSE(prime_sequence_satisfies({3, 5}, 100));
  CHECK_FALSE(prime_sequence_satisfies({2, 2, 3}, 100));
  CHECK_FALSE(prime_sequence_satisfies({}, 100));
  // Longer than the number of primes <= limit.
  CHECK_FALSE(prime_sequence_satisfies({2, 3, 5, 7, 11}, 10));
}

TEST_CASE("prime rule accepts exactly the prime prefixes (exhaustive, length <= 3, E = 1..10)") {
  const auto rule = make_primes_rule(10);
  std::vector<Genome> accepted;
  for_each_genome(3, 1, 10, [&](const Genome& g) {
    if (rule(g)) accepted.push_back(g);
    CHECK(rule(g) == prime_sequence_satisfies(g, 10));
  });
  CHECK(accepted == std::vector<Genome>{{2}, {2, 3}, {2, 3, 5}});
  CHECK(rule.max_complexity_hint == 4);
}

TEST_CASE("all_ones_satisfies") {
  CHECK(all_ones_satisfies({1, 1, 1}));
  CHECK(all_ones_satisfies({1}));
  CHECK_FALSE(all_ones_satisfies({1, 0, 1}));
  CHECK_FALSE(all_ones_satisfies({}));
  CHECK_FALSE(all_ones_satisfies({2}));
}

TEST_CASE("both shipped rules are prefix-closed and reject the empty genome") {
  const std::vector<ReplicationRule> rules = {make_primes_rule(10), make_onemax_rule(),
                                              make_sequence_prefix_rule({4, 4, 9})};
  for (const auto& rule : rules) {
    CAPTURE(rule.name);
    CHECK_FALSE(rule(Genome{}));
    for_each_genome(3, 0, 10, [&](const Genome& g) {
      if (g.complexity() >= 2 && rule(g)) {
        Genome prefix = g;
        prefix.elements.pop_back();
        CHECK(rule(prefix));
      }
    });
  }
}

TEST_CASE("permutation behaviour: onemax ignores order, primes does not") {
  for_each_genome(3, 0, 3, [](const Genome& g) {
    Genome p = g;
    std::sort(p.elements.begin(), p.elements.end());
    do {
      CHECK(all_ones_satisfies(p) == all_ones_satisfies(g));
    } while (std::next_permutation(p.elements.begin(), p.elements.end()));
  });
  CHECK(prime_sequence_satisfies({2, 3}, 10));
  CHECK_FALSE(prime_sequence_satisfies({3, 2}, 10));
}

TEST_CASE("sequence prefix rule") {
  const auto rule = make_sequence_prefix_rule({1, 1, 2, 3, 5, 8});
  CHECK(rule.name == "sequence");
  CHECK(rule({1, 1, 2}));
  CHECK_FALSE(rule({1, 2}));
  CHECK(rule.max_complexity_hint == 6);

  const auto onemax = make_onemax_rule(20);
  CHECK(onemax.max_complexity_hint == 20);
  CHECK_FALSE(make_onemax_rule().max_complexity_hint.has_value());
}
