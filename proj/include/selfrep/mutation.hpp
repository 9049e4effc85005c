#pragma once

#include <span>

#include "selfrep/population.hpp"
#include "selfrep/random.hpp"

namespace selfrep {

enum class MutationKind { additive, subtractive };

/// Appends one element drawn uniformly from element_set.
Genome mutate_additive(const Genome& genome, std::span<const Element> element_set, Rng& rng);

/// Removes the element at a uniformly drawn position. Genome must be non-empty.
Genome mutate_subtractive(const Genome& genome, Rng& rng);

/// Imperfect copy: additive or subtractive with probability 1/2 each.
/// An empty genome has nothing to remove and always mutates additively
/// (no random draw is spent on the kind in that case).
Genome mutate(const Genome& genome, std::span<const Element> element_set, Rng& rng,
              MutationKind* kind_out = nullptr);

}  // namespace selfrep
