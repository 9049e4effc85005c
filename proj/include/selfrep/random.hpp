#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace selfrep {

/// Seeded random stream used by every stochastic operation.
///
/// The engine std::mt19937_64 has a standardized output sequence; the
/// derived distributions below are implemented here rather than taken from
/// <random>, whose distribution algorithms differ between standard
/// libraries. A fixed seed therefore yields the same run everywhere.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t uniform_below(std::uint64_t bound);

  bool bernoulli(double p) { return uniform01() < p; }

  /// Exact Binomial(n, p) variate.
  ///
  /// Small means use sequential inversion; larger means use Hormann's
  /// BTRS transformed-rejection sampler. Neither path approximates.
  std::uint64_t binomial(std::uint64_t n, double p);

  /// Exact multinomial draw of n trials over `categories` equiprobable cells.
  /// Returns one count per cell; counts sum to n.
  std::vector<std::uint64_t> multinomial_uniform(std::uint64_t n,
                                                 std::size_t categories);

 private:
  std::uint64_t binomial_inversion(std::uint64_t n, double p);
  std::uint64_t binomial_btrs(std::uint64_t n, double p);

  std::mt19937_64 engine_;
};

}  // namespace selfrep
