#include "selfrep/random.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace selfrep {

namespace {

// log(k!) minus its Stirling approximation, for k < 10.
constexpr std::array<double, 10> kStirlingTail = {
    0.08106146679532733, 0.04134069595540946, 0.027677925684997717,
    0.02079067210376584, 0.01664469118982126, 0.013876128823072875,
    0.011896709945893313, 0.010411265261973668, 0.00925546218270945,
    0.008330563433359472};

double stirling_tail(double k) {
  if (k < 10.0) return kStirlingTail[static_cast<std::size_t>(k)];
  const double k2 = k * k;
  return (1.0 / 12.0 - (1.0 / 360.0 - (1.0 / 1260.0) / k2) / k2) / k;
}

// Below this mean, inversion is cheaper than rejection and (1-p)^n is far
// from underflow.
constexpr double kInversionMeanLimit = 10.0;

// Below this many trials a multinomial is drawn trial by trial.
constexpr std::uint64_t kDirectMultinomialLimit = 16;

__extension__ using u128 = unsigned __int128;

}  // namespace

double Rng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
  // Lemire's nearly-divisionless method.
  u128 m = static_cast<u128>(engine_()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<u128>(engine_()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::uint64_t Rng::binomial(std::uint64_t n, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binomial: p outside [0, 1]");
  if (n == 0 || p == 0.0) return 0;
  if (p == 1.0) return n;
  if (p > 0.5) return n - binomial(n, 1.0 - p);
  if (static_cast<double>(n) * p < kInversionMeanLimit) return binomial_inversion(n, p);
  return binomial_btrs(n, p);
}

std::uint64_t Rng::binomial_inversion(std::uint64_t n, double p) {
  const double q = 1.0 - p;
  const double odds = p / q;
  const auto nd = static_cast<double>(n);
  double pmf = std::exp(nd * std::log1p(-p));
  double u = uniform01();
  std::uint64_t k = 0;
  while (u > pmf) {
    u -= pmf;
    if (k == n) {
      // Rounding left a sliver of mass past the support; restart the draw.
      pmf = std::exp(nd * std::log1p(-p));
      u = uniform01();
      k = 0;
      continue;
    }
    pmf *= odds * (nd - static_cast<double>(k)) / static_cast<double>(k + 1);
    ++k;
  }
  return k;
}

std::uint64_t Rng::binomial_btrs(std::uint64_t n, double p) {
  const auto nd = static_cast<double>(n);
  const double spq = std::sqrt(nd * p * (1.0 - p));
  const double b = 1.15 + 2.53 * spq;
  const double a = -0.0873 + 0.0248 * b + 0.01 * p;
  const double c = nd * p + 0.5;
  const double v_r = 0.92 - 4.2 / b;
  const double r = p / (1.0 - p);
  const double alpha = (2.83 + 5.1 / b) * spq;
  const double m = std::floor((nd + 1.0) * p);

  for (;;) {
    const double u = uniform01() - 0.5;
    double v = uniform01();
    const double us = 0.5 - std::fabs(u);
    const double k = std::floor((2.0 * a / us + b) * u + c);
    if (k < 0.0 || k > nd) continue;
    if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(k);

    v = std::log(v * alpha / (a / (us * us) + b));
    const double bound = (m + 0.5) * std::log((m + 1.0) / (r * (nd - m + 1.0))) +
                         (nd + 1.0) * std::log((nd - m + 1.0) / (nd - k + 1.0)) +
                         (k + 0.5) * std::log(r * (nd - k + 1.0) / (k + 1.0)) +
                         stirling_tail(m) + stirling_tail(nd - m) -
                         stirling_tail(k) - stirling_tail(nd - k);
    if (v <= bound) return static_cast<std::uint64_t>(k);
  }
}

std::vector<std::uint64_t> Rng::multinomial_uniform(std::uint64_t n,
                                                    std::size_t categories) {
  if (categories == 0) throw std::invalid_argument("multinomial_uniform: no categories");
  std::vector<std::uint64_t> counts(categories, 0);
  if (n <= kDirectMultinomialLimit) {
    for (std::uint64_t i = 0; i < n; ++i) ++counts[uniform_below(categories)];
    return counts;
  }
  // Conditional binomials: cell i takes Binomial(remaining, 1/(cells left)).
  std::uint64_t remaining = n;
  for (std::size_t i = 0; i + 1 < categories && remaining > 0; ++i) {
    const double p = 1.0 / static_cast<double>(categories - i);
    counts[i] = binomial(remaining, p);
    remaining -= counts[i];
  }
  counts.back() += remaining;
  return counts;
}

}  // namespace selfrep
