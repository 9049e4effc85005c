#include "selfrep/population.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace selfrep {

std::string to_string(const Genome& genome) {
  return fmt::format("[{}]", fmt::join(genome.elements, ","));
}

Count checked_add(Count a, Count b) {
  Count sum = 0;
  if (__builtin_add_overflow(a, b, &sum) || sum > kMaxCount) throw CountOverflowError();
  return sum;
}

void Population::add(const Genome& genome, int lifetime, Count count) {
  add(Genome(genome), lifetime, count);
}

void Population::add(Genome&& genome, int lifetime, Count count) {
  if (count == 0) return;
  const Count new_total = checked_add(total_, count);
  auto [it, inserted] = cohorts_.try_emplace(Key{std::move(genome), lifetime}, count);
  if (!inserted) it->second = checked_add(it->second, count);
  total_ = new_total;
}

std::vector<Cohort> Population::to_cohorts() const {
  std::vector<Cohort> out;
  out.reserve(cohorts_.size());
  for (const auto& [key, count] : cohorts_) out.push_back({key.genome, key.lifetime, count});
  return out;
}

}  // namespace selfrep
