#include "selfrep/mutation.hpp"

#include <stdexcept>

namespace selfrep {

Genome mutate_additive(const Genome& genome, std::span<const Element> element_set, Rng& rng) {
  if (element_set.empty()) throw std::invalid_argument("mutate: empty element set");
  Genome out = genome;
  out.elements.push_back(element_set[rng.uniform_below(element_set.size())]);
  return out;
}

Genome mutate_subtractive(const Genome& genome, Rng& rng) {
  if (genome.empty()) throw std::invalid_argument("mutate: nothing to remove from empty genome");
  Genome out = genome;
  const auto pos = rng.uniform_below(out.elements.size());
  out.elements.erase(out.elements.begin() + static_cast<std::ptrdiff_t>(pos));
  return out;
}

Genome mutate(const Genome& genome, std::span<const Element> element_set, Rng& rng,
              MutationKind* kind_out) {
  const MutationKind kind = (genome.empty() || rng.bernoulli(0.5)) ? MutationKind::additive
                                                                   : MutationKind::subtractive;
  if (kind_out) *kind_out = kind;
  return kind == MutationKind::additive ? mutate_additive(genome, element_set, rng)
                                        : mutate_subtractive(genome, rng);
}

}  // namespace selfrep
