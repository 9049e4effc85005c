#include <doctest.h>

#include <algorithm>

#include "selfrep/engine.hpp"
#include "selfrep/mutation.hpp"
#include "stats_util.hpp"

using namespace selfrep;
using namespace selfrep::testing;

TEST_CASE("mutation examples") {
  Rng rng(1);
  const std::vector<Element> five = {5};
  CHECK(mutate_additive({2, 3}, five, rng) == Genome{2, 3, 5});
  CHECK(mutate_subtractive({7}, rng) == Genome{});
  CHECK_THROWS_AS(mutate_subtractive({}, rng), std::invalid_argument);
  CHECK_THROWS_AS(mutate_additive({1}, std::vector<Element>{}, rng), std::invalid_argument);

  MutationKind kind{};
  for (int i = 0; i < 20; ++i) {
    CHECK(mutate({}, five, rng, &kind) == Genome{5});
    CHECK(kind == MutationKind::additive);
  }
}

TEST_CASE("mutation length changes by exactly one and stays in E") {
  Rng rng(99);
  const auto e = element_range(1, 6);
  Genome g{3, 1, 4, 1};
  for (int i = 0; i < 5000; ++i) {
    MutationKind kind{};
    const Genome out = mutate(g, e, rng, &kind);
    if (kind == MutationKind::additive) {
      REQUIRE(out.complexity() == g.complexity() + 1);
      CHECK(std::equal(g.elements.begin(), g.elements.end(), out.elements.begin()));
    } else {
      REQUIRE(out.complexity() + 1 == g.complexity());
      // Exactly one index deleted.
      bool found = false;
      for (std::size_t k = 0; k < g.complexity() && !found; ++k) {
        Genome erased = g;
        erased.elements.erase(erased.elements.begin() + static_cast<std::ptrdiff_t>(k));
        found = erased == out;
      }
      CHECK(found);
    }
    for (Element x : out.elements) CHECK(std::find(e.begin(), e.end(), x) != e.end());
    // Random walk over genomes; restart when empty.
    g = out.empty() ? Genome{1} : out;
    if (g.complexity() > 30) g = Genome{2};
  }
}

TEST_CASE("mutation statistics on [2,3] with E = 1..100") {
  Rng rng(2024);
  const auto e = element_range(1, 100);
  const int calls = 100000;
  int additive = 0;
  std::vector<double> appended(100, 0.0);
  for (int i = 0; i < calls; ++i) {
    MutationKind kind{};
    const Genome out = mutate({2, 3}, e, rng, &kind);
    if (kind == MutationKind::additive) {
      ++additive;
      appended[out.elements.back() - 1] += 1;
    }
  }
  const double se = std::sqrt(0.25 / calls);
  CHECK(std::fabs(additive / static_cast<double>(calls) - 0.5) < 4 * se);
  CHECK(chi_square_gof_p(appended, std::vector<double>(100, additive / 100.0)) > 0.01);
}
