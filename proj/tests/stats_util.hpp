#pragma once

// Test-only statistics helpers (independent of the library under test).

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

namespace selfrep::testing {

/// Upper-tail p-value of a chi-square goodness-of-fit test. Cells with an
/// expected count below 5 are pooled with their neighbours.
inline double chi_square_gof_p(const std::vector<double>& observed,
                               const std::vector<double>& expected) {
  if (observed.size() != expected.size()) throw std::invalid_argument("size mismatch");
  std::vector<double> obs, exp;
  double o_acc = 0, e_acc = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    o_acc += observed[i];
    e_acc += expected[i];
    if (e_acc >= 5.0) {
      obs.push_back(o_acc);
      exp.push_back(e_acc);
      o_acc = e_acc = 0;
    }
  }
  if (e_acc > 0 || o_acc > 0) {
    if (exp.empty()) throw std::invalid_argument("not enough expected mass");
    obs.back() += o_acc;
    exp.back() += e_acc;
  }
  if (exp.size() < 2) return 1.0;
  double stat = 0;
  for (std::size_t i = 0; i < obs.size(); ++i) stat += (obs[i] - exp[i]) * (obs[i] - exp[i]) / exp[i];
  boost::math::chi_squared dist(static_cast<double>(exp.size() - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

/// Two-sample chi-square homogeneity test on count histograms over the same
/// cells. Sparse cells (pooled expected < 5) are merged.
inline double chi_square_two_sample_p(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
  const double na = std::accumulate(a.begin(), a.end(), 0.0);
  const double nb = std::accumulate(b.begin(), b.end(), 0.0);
  const double n = na + nb;
  std::vector<double> ca, cb;
  double acc_a = 0, acc_b = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc_a += a[i];
    acc_b += b[i];
    const double col = acc_a + acc_b;
    if (std::min(col * na / n, col * nb / n) >= 5.0) {
      ca.push_back(acc_a);
      cb.push_back(acc_b);
      acc_a = acc_b = 0;
    }
  }
  if (acc_a + acc_b > 0 && !ca.empty()) {
    ca.back() += acc_a;
    cb.back() += acc_b;
  }
  if (ca.size() < 2) return 1.0;
  double stat = 0;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    const double col = ca[i] + cb[i];
    const double ea = col * na / n, eb = col * nb / n;
    stat += (ca[i] - ea) * (ca[i] - ea) / ea + (cb[i] - eb) * (cb[i] - eb) / eb;
  }
  boost::math::chi_squared dist(static_cast<double>(ca.size() - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

/// Exact Binomial(n, p) pmf by direct log-space evaluation.
inline std::vector<double> binomial_pmf(int n, double p) {
  std::vector<double> pmf(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const double log_c = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    pmf[static_cast<std::size_t>(k)] = std::exp(log_c + k * std::log(p) + (n - k) * std::log1p(-p));
  }
  return pmf;
}

struct SampleMoments {
  double n = 0, sum = 0, sum_sq = 0;
  void add(double x) {
    n += 1;
    sum += x;
    sum_sq += x * x;
  }
  double mean() const { return sum / n; }
  double variance() const { return (sum_sq - n * mean() * mean()) / (n - 1); }
  double standard_error() const { return std::sqrt(variance() / n); }
};

}  // namespace selfrep::testing
